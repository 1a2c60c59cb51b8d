/**
 * Dataset ingestion: the same CSV the screening pipeline reads (a `smiles`
 * column; other columns ignored here) or a plain one-SMILES-per-line file.
 */

import * as fs from "fs";

export function loadSmiles(filePath: string, limit?: number): string[] {
  const text = fs.readFileSync(filePath, "utf-8");
  const lines = text.split("\n").filter((l) => l.trim().length > 0);
  let smiles: string[];
  if (filePath.endsWith(".csv")) {
    const header = lines[0].split(",").map((c) => c.trim());
    const column = header.indexOf("smiles");
    if (column === -1) throw new Error(`${filePath}: no 'smiles' column`);
    smiles = lines.slice(1).map((l) => l.split(",")[column].trim());
  } else {
    smiles = lines
      .filter((l) => !l.trimStart().startsWith("#"))
      .map((l) => l.trim().split(/\s+/)[0]);
  }
  return limit ? smiles.slice(0, limit) : smiles;
}
