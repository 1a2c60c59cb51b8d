"""PubChem existence lookups with an on-disk cache.

Statuses are ``known`` / ``unknown`` / ``unavailable``.  Transport problems
degrade to ``unavailable`` with a warning and are never cached, so a later
online run can fill them in; definite answers are cached one record per line
(canonical SMILES, status, timestamp).  Requests are rate limited to five per
second no matter how many threads screen records concurrently.
"""

from __future__ import annotations

import os
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
import warnings

DEFAULT_BASE_URL = "https://pubchem.ncbi.nlm.nih.gov/rest/pug"
BASE_URL_ENV = "FRAGSCREEN_PUBCHEM_URL"
CACHE_FILE = "pubchem_cache.tsv"
MIN_INTERVAL_S = 0.2  # 5 requests / second

KNOWN = "known"
UNKNOWN = "unknown"
UNAVAILABLE = "unavailable"


def _default_transport(url: str, timeout: float = 10.0) -> tuple[int, str]:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as response:
            return response.status, response.read().decode("utf-8", "replace")
    except urllib.error.HTTPError as err:
        return err.code, ""


class PubChemClient:
    """Existence checks keyed by canonical SMILES.

    ``transport`` is a callable ``url -> (status_code, body)``; tests inject
    fakes, offline mode short-circuits before any call.
    """

    def __init__(
        self,
        cache_dir: str | None = None,
        offline: bool = False,
        base_url: str | None = None,
        transport=None,
        sleep=time.sleep,
        clock=time.monotonic,
    ):
        self.offline = offline
        self.base_url = (
            base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL
        ).rstrip("/")
        self.transport = transport or _default_transport
        self.network_calls = 0
        self._sleep = sleep
        self._clock = clock
        self._last_call = None
        self._lock = threading.Lock()
        self._cache: dict[str, str] = {}
        self._cache_path = None
        if cache_dir is not None:
            os.makedirs(cache_dir, exist_ok=True)
            self._cache_path = os.path.join(cache_dir, CACHE_FILE)
            self._load_cache()

    def _load_cache(self) -> None:
        if self._cache_path is None or not os.path.exists(self._cache_path):
            return
        with open(self._cache_path) as fh:
            for line in fh:
                parts = line.rstrip("\n").split("\t")
                if len(parts) >= 2 and parts[1] in (KNOWN, UNKNOWN):
                    self._cache[parts[0]] = parts[1]

    def _append_cache(self, smiles: str, status: str) -> None:
        self._cache[smiles] = status
        if self._cache_path is not None:
            with open(self._cache_path, "a") as fh:
                fh.write(f"{smiles}\t{status}\t{int(time.time())}\n")

    def _throttle(self) -> None:
        now = self._clock()
        if self._last_call is not None:
            wait = MIN_INTERVAL_S - (now - self._last_call)
            if wait > 0:
                self._sleep(wait)
        self._last_call = self._clock()

    def lookup(self, canonical_smiles: str) -> str:
        with self._lock:
            cached = self._cache.get(canonical_smiles)
            if cached is not None:
                return cached
            if self.offline:
                return UNAVAILABLE
            url = "{}/compound/smiles/{}/cids/TXT".format(
                self.base_url, urllib.parse.quote(canonical_smiles, safe="")
            )
            self._throttle()
            self.network_calls += 1
            try:
                status_code, body = self.transport(url)
            except Exception as err:  # transport failure, not chemistry
                warnings.warn(f"PubChem lookup failed: {err}", stacklevel=2)
                return UNAVAILABLE
            if status_code == 200 and any(
                line.strip().isdigit() and int(line) > 0
                for line in body.splitlines()
            ):
                result = KNOWN
            elif status_code in (200, 404):
                result = UNKNOWN
            else:
                warnings.warn(
                    f"PubChem returned HTTP {status_code}; treating as unavailable",
                    stacklevel=2,
                )
                return UNAVAILABLE
            self._append_cache(canonical_smiles, result)
            return result
