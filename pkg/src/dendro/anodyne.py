"""Anodyne extension certificates: verification and search.

A certificate witnesses that an inclusion of subcomplexes is a composition
of pushouts of horn inclusions (a filtration), possibly through nested
certified pushouts or a retract of a certified inclusion.  Each horn step
carries the class of its generating horn; the classes are totally ordered

    Inner < Left < BinaryExtendedLeft < ExtendedLeft < Outer

where Left adds all non-root horns, BinaryExtendedLeft adds root horns of
binary extended corollas, ExtendedLeft adds root horns of all extended
corollas, and Outer admits every horn.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complexes import Cell, Complex, Subcomplex, closure_cells
from .trees import (ROOT_FACE, HornSpec, Tree, TreeError, Vertex, classify_horn,
                    face, faces, horn)


class AnodyneClass(enum.IntEnum):
    INNER = 0
    LEFT = 1
    BINARY_EXTENDED_LEFT = 2
    EXTENDED_LEFT = 3
    OUTER = 4

    def __str__(self):
        return self.name


def class_phrase(cls: AnodyneClass) -> str:
    """Human-readable class name, e.g. 'binary extended left'."""
    return cls.name.replace("_", " ").lower()


def parse_class(text: str) -> AnodyneClass:
    key = text.strip().replace("-", " ").replace("_", " ").upper().replace(" ", "_")
    try:
        return AnodyneClass[key]
    except KeyError:
        raise ValueError(f"unknown anodyne class {text!r}") from None


def generator_class(tree: Tree, omitted_key: tuple[str, str]) -> AnodyneClass:
    """The smallest anodyne class containing the horn of `tree` omitting the
    given face."""
    h = horn(tree, face(tree, *omitted_key))
    cls = classify_horn(h)
    if cls == "inner":
        return AnodyneClass.INNER
    if cls == "leaf":
        return AnodyneClass.LEFT
    # root horn: a generator iff the tree is an extended corolla, i.e. every
    # vertex except possibly the root vertex is unary
    root_vertex = tree.vertex_above(tree.root)
    if all(v.arity == 1 for v in tree.vertices if v is not root_vertex):
        if root_vertex.arity == 2:
            return AnodyneClass.BINARY_EXTENDED_LEFT
        return AnodyneClass.EXTENDED_LEFT
    return AnodyneClass.OUTER


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HornStep:
    """Attach a cell along a horn: its closure must meet the current
    subcomplex in exactly the horn omitting the named face."""
    cell: Cell
    omitted: tuple[str, str]


@dataclass(frozen=True)
class NestedStep:
    """Attach a cell along a certified anodyne map from a proper subcomplex
    of its boundary (used when the attaching map is itself a root horn whose
    anodyne witness is a sub-certificate)."""
    cell: Cell
    certificate: "Certificate"


Step = "HornStep | NestedStep"


@dataclass(frozen=True)
class Certificate:
    """A certified anodyne inclusion start -> target inside an ambient
    complex presented by generator trees.

    kind "filtration": replay the steps in order.
    kind "retract": the inclusion is a retract of the sub-certificate's
    inclusion along the given edge maps (section into the sub-ambient,
    retraction back; retraction after section is the identity).
    """
    ambient_generators: tuple[Tree, ...]
    start: tuple[Cell, ...]
    target: tuple[Cell, ...]
    kind: str = "filtration"
    steps: tuple = ()
    sub: "Certificate | None" = None
    section: tuple[tuple[str, str], ...] = ()
    retraction: tuple[tuple[str, str], ...] = ()

    def ambient(self) -> Complex:
        return Complex(self.ambient_generators)


@dataclass
class Violation:
    step_index: tuple[int, ...]   # path through nested certificates
    message: str

    def __str__(self):
        where = ".".join(map(str, self.step_index)) or "certificate"
        return f"step {where}: {self.message}"


@dataclass
class VerificationReport:
    valid: bool
    classes_used: list[AnodyneClass]
    step_count: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def overall_class(self) -> AnodyneClass | None:
        return max(self.classes_used) if self.classes_used else None

    def summary(self) -> str:
        status = "valid" if self.valid else "INVALID"
        cls = str(self.overall_class) if self.classes_used else "none"
        return (f"{status}: {self.step_count} steps, class {cls}"
                + ("" if self.valid else f", {len(self.violations)} violations"))


def _map_tree(tree: Tree, m: dict[str, str]) -> Tree | None:
    """The image of a tree under an edge map, collapsing unary vertices
    whose input and output coincide; None if the images do not form a tree."""
    vs = []
    for v in tree.vertices:
        ins = tuple(m[e] for e in v.inputs)
        out = m[v.output]
        if ins == (out,):
            continue
        vs.append(Vertex(ins, out))
    try:
        return Tree(tuple(vs), m[tree.root])
    except TreeError:
        return None


def verify_certificate(cert: Certificate, path: tuple[int, ...] = ()) -> VerificationReport:
    """Replay and check every step; all failures are reported, pinpointed by
    their step path."""
    rep = VerificationReport(valid=True, classes_used=[], step_count=0)
    try:
        amb = cert.ambient()
        start = amb.closure_subcomplex(cert.start)
        target = amb.closure_subcomplex(cert.target)
    except (ValueError, KeyError, TreeError) as exc:
        return VerificationReport(False, [], 0, [Violation(path, f"malformed certificate: {exc}")])
    if cert.kind == "retract":
        _verify_retract(cert, amb, start, target, rep, path)
        return rep
    if cert.kind != "filtration":
        return VerificationReport(False, [], 0, [Violation(path, f"unknown kind {cert.kind!r}")])
    current = set(start.cells)
    for i, step in enumerate(cert.steps):
        here = path + (i,)
        rep.step_count += 1
        if isinstance(step, HornStep):
            _verify_horn_step(step, amb, current, rep, here)
        elif isinstance(step, NestedStep):
            _verify_nested_step(step, amb, current, rep, here)
        else:
            rep.valid = False
            rep.violations.append(Violation(here, f"unknown step type {type(step).__name__}"))
    if set(target.cells) != current:
        rep.valid = False
        missing = sorted(target.cells - current, key=sorted)[:3]
        extra = sorted(current - target.cells, key=sorted)[:3]
        rep.violations.append(Violation(
            path, f"final subcomplex differs from target "
                  f"(missing {missing}, extra {extra})"))
    return rep


def _verify_horn_step(step: HornStep, amb: Complex, current: set, rep, here) -> None:
    try:
        tree = amb.tree_of(step.cell)
    except KeyError:
        rep.valid = False
        rep.violations.append(Violation(here, f"not an ambient cell: {sorted(step.cell)}"))
        return
    if step.cell in current:
        rep.valid = False
        rep.violations.append(Violation(here, f"cell already present: {sorted(step.cell)}"))
        return
    try:
        hc = amb.horn_subcomplex(step.cell, step.omitted)
    except TreeError as exc:
        rep.valid = False
        rep.violations.append(Violation(here, str(exc)))
        return
    met = amb.closure(step.cell) & current
    if met != hc.cells:
        rep.valid = False
        missing = sorted(hc.cells - met, key=sorted)[:3]
        extra = sorted(met - hc.cells, key=sorted)[:3]
        rep.violations.append(Violation(
            here, f"attachment of {sorted(step.cell)} along {step.omitted} is not a "
                  f"horn pushout (horn cells missing: {missing}; excess: {extra})"))
        return
    rep.classes_used.append(generator_class(tree, step.omitted))
    current.update(amb.closure(step.cell))


def _verify_nested_step(step: NestedStep, amb: Complex, current: set, rep, here) -> None:
    try:
        tree = amb.tree_of(step.cell)
    except KeyError:
        rep.valid = False
        rep.violations.append(Violation(here, f"not an ambient cell: {sorted(step.cell)}"))
        return
    sub = step.certificate
    sub_rep = verify_certificate(sub, here)
    rep.step_count += sub_rep.step_count
    rep.classes_used.extend(sub_rep.classes_used)
    if not sub_rep.valid:
        rep.valid = False
        rep.violations.extend(sub_rep.violations)
        return
    sub_amb = sub.ambient()
    if set(sub_amb.cells) != closure_cells(tree).keys():
        rep.valid = False
        rep.violations.append(Violation(
            here, f"nested ambient is not the closure of {sorted(step.cell)}"))
        return
    sub_start = sub_amb.closure_subcomplex(sub.start)
    met = amb.closure(step.cell) & current
    if met != sub_start.cells:
        rep.valid = False
        rep.violations.append(Violation(
            here, f"nested attachment of {sorted(step.cell)}: current meets its "
                  f"closure in {len(met)} cells but the sub-certificate starts "
                  f"from {len(sub_start.cells)}"))
        return
    sub_target = sub_amb.closure_subcomplex(sub.target)
    if set(sub_target.cells) != set(sub_amb.cells):
        rep.valid = False
        rep.violations.append(Violation(here, "nested certificate does not reach the full cell"))
        return
    current.update(amb.closure(step.cell))


def _verify_retract(cert: Certificate, amb: Complex, start: Subcomplex,
                    target: Subcomplex, rep, path) -> None:
    sub = cert.sub
    if sub is None:
        rep.valid = False
        rep.violations.append(Violation(path, "retract certificate without sub-certificate"))
        return
    sub_rep = verify_certificate(sub, path + (0,))
    rep.step_count += sub_rep.step_count
    rep.classes_used.extend(sub_rep.classes_used)
    if not sub_rep.valid:
        rep.valid = False
        rep.violations.extend(sub_rep.violations)
        return
    s = dict(cert.section)
    r = dict(cert.retraction)
    sub_amb = sub.ambient()
    my_edges = set().union(*[g.edges for g in cert.ambient_generators])
    sub_edges = set().union(*[g.edges for g in sub.ambient_generators])
    if set(s) != my_edges or not set(s.values()) <= sub_edges:
        rep.valid = False
        rep.violations.append(Violation(path, "section is not an edge map into the sub-ambient"))
        return
    if set(r) != sub_edges or not set(r.values()) <= my_edges:
        rep.valid = False
        rep.violations.append(Violation(path, "retraction is not an edge map into the ambient"))
        return
    bad_rs = [e for e in my_edges if r[s[e]] != e]
    if bad_rs:
        rep.valid = False
        rep.violations.append(Violation(
            path, f"retraction after section is not the identity at {sorted(bad_rs)}"))
        return
    sub_start = sub_amb.closure_subcomplex(sub.start)
    sub_target = sub_amb.closure_subcomplex(sub.target)
    # the section carries (start, target) into (sub start, sub target)
    for cells, image, label in ((target.cells, sub_target, "target"),
                                (start.cells, sub_start, "start")):
        for c in cells:
            ic = frozenset(s[e] for e in c)
            it = _map_tree(amb.cells[c], s)
            if ic not in image.cells or it is None or it != sub_amb.cells[ic]:
                rep.valid = False
                rep.violations.append(Violation(
                    path, f"section does not carry {label} cell {sorted(c)} "
                          f"into the sub-{label}"))
    # the retraction carries (sub start, sub target) back into (start, target)
    for cells, image, label in ((sub_target.cells, target, "target"),
                                (sub_start.cells, start, "start")):
        for c in cells:
            ic = frozenset(r[e] for e in c)
            it = _map_tree(sub_amb.cells[c], r)
            if ic not in image.cells or it is None or it != amb.cells[ic]:
                rep.valid = False
                rep.violations.append(Violation(
                    path, f"retraction does not carry sub-{label} cell {sorted(c)} "
                          f"into the {label}"))


def certificate_class(cert: Certificate) -> AnodyneClass | None:
    """The largest generator class claimed by the certificate's steps,
    without replaying them; None for an empty filtration."""
    if cert.kind == "retract":
        return certificate_class(cert.sub) if cert.sub is not None else None
    amb = cert.ambient()
    classes: list[AnodyneClass] = []
    for step in cert.steps:
        if isinstance(step, HornStep):
            classes.append(generator_class(amb.tree_of(step.cell), step.omitted))
        elif isinstance(step, NestedStep):
            sub = certificate_class(step.certificate)
            if sub is not None:
                classes.append(sub)
    return max(classes) if classes else None


# ---------------------------------------------------------------------------
# building filtrations with inferred horns
# ---------------------------------------------------------------------------

class BuildError(ValueError):
    pass


def build_filtration(amb: Complex, start_cells: Sequence[Iterable[str]],
                     cell_order: Sequence[Iterable[str]],
                     target_cells: Sequence[Iterable[str]] | None = None,
                     nested: dict[Cell, Certificate] | None = None) -> Certificate:
    """Assemble a filtration certificate from an ordered list of cells,
    inferring for each the unique face missing from the current subcomplex.

    Cells listed in `nested` are attached through their sub-certificate
    instead of a horn.  Raises BuildError when a step is not a horn pushout.
    """
    nested = nested or {}
    start = amb.closure_subcomplex(start_cells)
    current = set(start.cells)
    steps: list = []
    for raw in cell_order:
        cell = frozenset(raw)
        tree = amb.tree_of(cell)
        if cell in current:
            raise BuildError(f"cell already present: {sorted(cell)}")
        if cell in nested:
            steps.append(NestedStep(cell, nested[cell]))
            current.update(amb.closure(cell))
            continue
        missing = [f for f in faces(tree) if f.subtree.edges not in current]
        if len(missing) != 1:
            raise BuildError(
                f"cell {sorted(cell)} has {len(missing)} missing faces "
                f"({[f.key for f in missing]}); not a horn attachment")
        om = missing[0]
        met = amb.closure(cell) & current
        if met != amb.horn_subcomplex(cell, om.key).cells:
            raise BuildError(f"cell {sorted(cell)} does not meet the current "
                             f"subcomplex in the horn at {om.key}")
        steps.append(HornStep(cell, om.key))
        current.update(amb.closure(cell))
    if target_cells is None:
        target = tuple(sorted(current, key=sorted))
    else:
        target = tuple(frozenset(c) for c in target_cells)
    return Certificate(ambient_generators=amb.generators,
                       start=tuple(frozenset(c) for c in start_cells),
                       target=target, kind="filtration", steps=tuple(steps))


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    certificate: Certificate | None
    examined: int
    exhausted_budget: bool


def search_certificate(amb: Complex, start: Subcomplex, target: Subcomplex,
                       allowed: AnodyneClass = AnodyneClass.INNER,
                       budget: int = 100_000) -> SearchResult:
    """Depth-first search for a filtration from start to target using horn
    attachments of class <= allowed.  Deterministic: candidate cells are
    tried in (size, name) order.  `budget` bounds candidate evaluations.
    """
    goal = set(target.cells)
    todo_all = sorted(goal - start.cells, key=lambda c: (len(c), sorted(c)))
    examined = 0
    out_of_budget = False

    def moves(current: set):
        nonlocal examined, out_of_budget
        found = []
        for cell in todo_all:
            if cell in current:
                continue
            if examined >= budget:
                out_of_budget = True
                break
            examined += 1
            tree = amb.cells[cell]
            if not tree.vertices:
                continue
            missing = [f for f in faces(tree) if f.subtree.edges not in current]
            if len(missing) != 1:
                continue
            om = missing[0]
            if generator_class(tree, om.key) > allowed:
                continue
            if amb.closure(cell) & current != amb.horn_subcomplex(cell, om.key).cells:
                continue
            found.append(HornStep(cell, om.key))
        return found

    def dfs(current: set, steps: list) -> bool:
        if current >= goal:
            return True
        for step in moves(current):
            added = amb.closure(step.cell) - current
            current |= added
            steps.append(step)
            if dfs(current, steps):
                return True
            steps.pop()
            current -= added
            if out_of_budget:
                break
        return False

    steps: list = []
    ok = dfs(set(start.cells), steps)
    if not ok:
        return SearchResult(None, examined, out_of_budget)
    cert = Certificate(
        ambient_generators=amb.generators,
        start=tuple(sorted(start.cells, key=sorted)),
        target=tuple(sorted(goal, key=sorted)),
        kind="filtration", steps=tuple(steps))
    return SearchResult(cert, examined, out_of_budget)
