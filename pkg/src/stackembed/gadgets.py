"""The two rooted gadget families and their catalog file.

Catalog format: blocks separated by blank lines, each::

    gadget <name> <T|Ttilde>
    outer: a b c
    <v>: <p> <q> <r>
    ...

Every invariant the constructions rely on is checked at load time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .iso import canonical_form_rooted
from .tritree import TriTree, TriTreeError, face_tree, parse_stacking

FAMILY_SEVEN = "T"
FAMILY_THREE = "Ttilde"

SIZES = {FAMILY_SEVEN: (7, 8), FAMILY_THREE: (3, 5)}  # family -> (members, vertices)
MAX_OUTER_INTERNAL = 4
MAX_INTERNAL_DEGREE = 7

CATALOG_ENV = "STACKEMBED_CATALOG"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Gadget:
    name: str
    tree: TriTree
    family: str

    def rooted_form(self, share_ab: bool = False) -> bytes:
        classes = (0, 0, 1) if share_ab else (0, 1, 2)
        return canonical_form_rooted(self.tree.adjacency(), self.tree.outer, classes)

    def outer_internal_neighbors(self) -> tuple[int, int, int]:
        return tuple(len(self.tree.neighbors(v) - {0, 1, 2}) for v in (0, 1, 2))  # type: ignore[return-value]


@dataclass(frozen=True)
class GadgetCatalog:
    seven: tuple[Gadget, ...]
    three: tuple[Gadget, ...]

    def family(self, name: str) -> tuple[Gadget, ...]:
        return {FAMILY_SEVEN: self.seven, FAMILY_THREE: self.three}[name]

    def flip_permutation(self, name: str) -> list[int]:
        """``perm[i] = j`` when flipping gadget ``i`` gives gadget ``j``."""
        fam = self.family(name)
        forms = [g.rooted_form() for g in fam]
        return [forms.index(flip(g).rooted_form()) for g in fam]


def flip(g: Gadget) -> Gadget:
    """Swap the roles of outer vertices ``a`` and ``b``."""
    t = g.tree
    out = TriTree([t.labels[1], t.labels[0], t.labels[2]])
    ren = {0: 1, 1: 0, 2: 2}
    for d, face in t.program:
        ren[d] = out.stack([ren[u] for u in face], t.labels[d])
    return Gadget(g.name + "'", out, g.family)


def _validate_gadget(g: Gadget) -> None:
    t = g.tree
    _, nv = SIZES[g.family]
    if t.n != nv:
        raise CatalogError(f"gadget {g.name}: vertex count {t.n}, expected {nv}")
    if len(t.faces()) != 2 * nv - 4:
        raise CatalogError(f"gadget {g.name}: face count {len(t.faces())}, expected {2 * nv - 4}")
    first = t.program[0][0]
    if not {0, 1, 2} <= t.neighbors(first):
        raise CatalogError(f"gadget {g.name}: first vertex not adjacent to a, b, c")
    if max(g.outer_internal_neighbors()) > MAX_OUTER_INTERNAL:
        raise CatalogError(f"gadget {g.name}: outer vertex with more than {MAX_OUTER_INTERNAL} internal neighbours")
    if any(t.degree(v) > MAX_INTERNAL_DEGREE for v in range(3, t.n)):
        raise CatalogError(f"gadget {g.name}: internal degree above {MAX_INTERNAL_DEGREE}")
    ft = face_tree(t)
    if ft.root.interior_count != nv - 3:
        raise CatalogError(f"gadget {g.name}: inconsistent face tree")


def validate_catalog(cat: GadgetCatalog) -> None:
    for fam in (FAMILY_SEVEN, FAMILY_THREE):
        members = cat.family(fam)
        count, _ = SIZES[fam]
        if len(members) != count:
            raise CatalogError(f"family {fam}: {len(members)} gadgets, expected {count}")
        for g in members:
            _validate_gadget(g)
        forms = [g.rooted_form() for g in members]
        if len(set(forms)) != len(forms):
            raise CatalogError(f"family {fam}: two gadgets are rooted-isomorphic")
        for g in members:
            if flip(g).rooted_form() not in forms:
                raise CatalogError(f"family {fam}: flip-symmetry fails for {g.name}")


def parse_catalog(text: str) -> GadgetCatalog:
    seven: list[Gadget] = []
    three: list[Gadget] = []
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(line)
    for block in blocks:
        if not block:
            continue
        head = block[0].split()
        if len(head) != 3 or head[0] != "gadget":
            raise CatalogError(f"expected 'gadget <name> <family>', got {block[0]!r}")
        _, name, fam = head
        if fam not in SIZES:
            raise CatalogError(f"gadget {name}: unknown family {fam!r}")
        try:
            tree = parse_stacking(block[1:])
        except TriTreeError as e:
            raise CatalogError(f"gadget {name}: {e}") from None
        (seven if fam == FAMILY_SEVEN else three).append(Gadget(name, tree, fam))
    return GadgetCatalog(tuple(seven), tuple(three))


def load_catalog(path: Optional[Union[str, Path]] = None) -> GadgetCatalog:
    """Load and validate a catalog; ``None`` means ``$STACKEMBED_CATALOG``
    or the bundled file."""
    if path is None:
        path = os.environ.get(CATALOG_ENV)
    if path is None:
        text = resources.files("stackembed").joinpath("data/gadgets.txt").read_text()
    else:
        text = Path(path).read_text()
    cat = parse_catalog(text)
    validate_catalog(cat)
    return cat


_default: Optional[GadgetCatalog] = None


def default_catalog() -> GadgetCatalog:
    global _default
    if _default is None:
        _default = load_catalog()
    return _default
