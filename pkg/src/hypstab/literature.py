"""Read-only lookup of published stability classifications.

Entries live in ``data/literature.json`` as a list of
``{"n", "d", "class", "status", "source"}`` records.  A lookup result never
overrides a computed certificate; it is merged into reports with a
``literature`` provenance tag.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .verdicts import Reason, StabilityVerdict, Status


@dataclass(frozen=True)
class LiteratureEntry:
    n: int
    d: int
    singularity_class: str
    status: Status
    source: str


@lru_cache(maxsize=1)
def literature_table() -> tuple[LiteratureEntry, ...]:
    raw = json.loads(resources.files("hypstab.data").joinpath("literature.json").read_text())
    return tuple(
        LiteratureEntry(
            n=int(e["n"]),
            d=int(e["d"]),
            singularity_class=str(e["class"]),
            status=Status(e["status"]),
            source=str(e["source"]),
        )
        for e in raw
    )


def literature_lookup(n: int, d: int, singularity_class: str) -> StabilityVerdict | None:
    """Verdict recorded in the literature for (n, d, class), if any."""
    for entry in literature_table():
        if (entry.n, entry.d, entry.singularity_class) == (n, d, singularity_class):
            return StabilityVerdict(
                entry.status,
                [
                    Reason(
                        criterion="literature",
                        note=f"published classification for n={n}, d={d}, class {singularity_class}",
                        inputs={"class": singularity_class},
                    )
                ],
                literature=entry.source,
            )
    return None
