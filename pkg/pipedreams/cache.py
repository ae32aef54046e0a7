"""
JSON-lines cache of the filling sweep, one file per n.

Each line is ``{"bits": <filling>, "w": [one-line permutation]}``.
"""
import io
import logging
from pathlib import Path

from django.conf import settings
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

logger = logging.getLogger(__name__)


def cache_path(n):
    if not settings.PIPEDREAM_CACHE_DIR:
        return None
    return Path(settings.PIPEDREAM_CACHE_DIR) / f"pipedreams-n{n}.jsonl"


def load_fillings(n, expected):
    path = cache_path(n)
    if path is None or not path.exists():
        return None
    parser = JSONParser()
    pairs = []
    try:
        with path.open("rb") as handle:
            for line in handle:
                if line.strip():
                    record = parser.parse(io.BytesIO(line))
                    pairs.append((record["bits"], tuple(record["w"])))
    except (ParseError, KeyError, TypeError) as exc:
        logger.warning("ignoring unreadable index cache %s: %s", path, exc)
        return None
    if len(pairs) != expected:
        logger.warning("ignoring index cache %s: %s fillings, expected %s", path, len(pairs), expected)
        return None
    logger.info("loaded %s fillings for n=%s from %s", len(pairs), n, path)
    return pairs


def store_fillings(n, pairs):
    path = cache_path(n)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    renderer = JSONRenderer()
    with path.open("wb") as handle:
        for bits, w in pairs:
            handle.write(renderer.render({"bits": bits, "w": list(w)}))
            handle.write(b"\n")
    logger.info("stored %s fillings for n=%s in %s", len(pairs), n, path)
