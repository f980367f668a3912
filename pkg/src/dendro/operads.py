"""Finite coloured operads and strict symmetric monoidal categories.

An operad is presented either by explicit tables (`TableOperad`) or lazily
from a finite strict symmetric monoidal category (`SMCOperad`), whose
operations with profile (c_1,...,c_n; c) are the morphisms from the chosen
n-fold tensor of the inputs to the output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

Profile = tuple[tuple[str, ...], str]


# ---------------------------------------------------------------------------
# strict symmetric monoidal categories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSMC:
    """A finite strict symmetric monoidal category.

    Morphisms have globally unique names; `profile` maps a name to
    (domain, codomain).  Tensor on objects is strictly associative and
    unital, so chosen n-fold tensors are iterated binary ones.
    """
    objects: tuple[str, ...]
    unit: str
    profile: dict[str, tuple[str, str]]
    compose: dict[tuple[str, str], str]           # (g, f) -> g after f
    identities: dict[str, str]                    # object -> identity morphism
    tensor_obj: dict[tuple[str, str], str]        # (a, b) -> a (x) b
    tensor_mor: dict[tuple[str, str], str]        # (f, g) -> f (x) g
    braiding: dict[tuple[str, str], str]          # (a, b) -> iso a(x)b -> b(x)a

    def homs(self, a: str, b: str) -> tuple[str, ...]:
        return tuple(sorted(m for m, (d, c) in self.profile.items()
                            if d == a and c == b))

    def tensor_objects(self, objs: Sequence[str]) -> str:
        out = self.unit
        for o in objs:
            out = self.tensor_obj[(out, o)]
        return out

    def tensor_morphisms(self, mors: Sequence[str]) -> str:
        out = self.identities[self.unit]
        for m in mors:
            out = self.tensor_mor[(out, m)]
        return out

    def permutation_iso(self, objs: Sequence[str], sigma: Sequence[int]) -> str:
        """The symmetry isomorphism tensor(objs permuted by sigma) ->
        tensor(objs), where the permuted list is objs[sigma[0]], ...

        Built from adjacent braidings; strictness makes the result
        independent of the chosen decomposition.
        """
        objs = list(objs)
        word = list(sigma)
        current = self.identities[self.tensor_objects([objs[i] for i in word])]
        # bubble-sort `word` to the identity; each swap composes a braiding
        changed = True
        while changed:
            changed = False
            for p in range(len(word) - 1):
                if word[p] > word[p + 1]:
                    left = self.identities[self.tensor_objects([objs[i] for i in word[:p]])]
                    right = self.identities[self.tensor_objects([objs[i] for i in word[p + 2:]])]
                    swap = self.braiding[(objs[word[p]], objs[word[p + 1]])]
                    step = self.tensor_mor[(self.tensor_mor[(left, swap)], right)]
                    current = self.compose[(step, current)]
                    word[p], word[p + 1] = word[p + 1], word[p]
                    changed = True
        return current


def validate_smc(c: FiniteSMC) -> list[str]:
    """Exhaustively check the axioms; returns human-readable violations."""
    bad: list[str] = []
    mors = sorted(c.profile)
    if c.unit not in c.objects:
        bad.append(f"unit {c.unit!r} is not an object")
    for o in c.objects:
        i = c.identities.get(o)
        if i is None or c.profile.get(i) != (o, o):
            bad.append(f"identity of {o!r} missing or has wrong profile")
    for (g, f), h in c.compose.items():
        df, cf = c.profile[f]
        dg, cg = c.profile[g]
        if cf != dg:
            bad.append(f"compose({g},{f}) defined but profiles do not match")
        elif c.profile[h] != (df, cg):
            bad.append(f"compose({g},{f})={h} has wrong profile")
    for f in mors:
        d, cod = c.profile[f]
        if c.compose.get((f, c.identities[d])) != f:
            bad.append(f"right unit law fails at {f}")
        if c.compose.get((c.identities[cod], f)) != f:
            bad.append(f"left unit law fails at {f}")
    for f in mors:
        for g in mors:
            if c.profile[f][1] != c.profile[g][0]:
                continue
            for h in mors:
                if c.profile[g][1] != c.profile[h][0]:
                    continue
                if c.compose[(c.compose[(h, g)], f)] != c.compose[(h, c.compose[(g, f)])]:
                    bad.append(f"associativity fails at ({h},{g},{f})")
    for a in c.objects:
        for b in c.objects:
            if (a, b) not in c.tensor_obj:
                bad.append(f"tensor_obj missing at ({a},{b})")
        if c.tensor_obj.get((c.unit, a)) != a or c.tensor_obj.get((a, c.unit)) != a:
            bad.append(f"tensor unit law fails on object {a!r}")
    for a, b, d in itertools.product(c.objects, repeat=3):
        if c.tensor_obj[(c.tensor_obj[(a, b)], d)] != c.tensor_obj[(a, c.tensor_obj[(b, d)])]:
            bad.append(f"tensor associativity fails on objects ({a},{b},{d})")
    for f in mors:
        for g in mors:
            fg = c.tensor_mor.get((f, g))
            want = (c.tensor_obj[(c.profile[f][0], c.profile[g][0])],
                    c.tensor_obj[(c.profile[f][1], c.profile[g][1])])
            if fg is None or c.profile[fg] != want:
                bad.append(f"tensor_mor missing or wrong profile at ({f},{g})")
    # interchange / functoriality of the tensor
    for f, f2, g, g2 in itertools.product(mors, repeat=4):
        if c.profile[f][1] != c.profile[f2][0] or c.profile[g][1] != c.profile[g2][0]:
            continue
        lhs = c.tensor_mor[(c.compose[(f2, f)], c.compose[(g2, g)])]
        rhs = c.compose[(c.tensor_mor[(f2, g2)], c.tensor_mor[(f, g)])]
        if lhs != rhs:
            bad.append(f"tensor interchange fails at ({f2},{f},{g2},{g})")
    for a, b in itertools.product(c.objects, repeat=2):
        s = c.braiding.get((a, b))
        if s is None or c.profile[s] != (c.tensor_obj[(a, b)], c.tensor_obj[(b, a)]):
            bad.append(f"braiding missing or wrong profile at ({a},{b})")
            continue
        back = c.braiding[(b, a)]
        if c.compose[(back, s)] != c.identities[c.tensor_obj[(a, b)]]:
            bad.append(f"braiding is not an involution at ({a},{b})")
    # naturality of the braiding
    for f, g in itertools.product(mors, repeat=2):
        a, a2 = c.profile[f]
        b, b2 = c.profile[g]
        lhs = c.compose[(c.braiding[(a2, b2)], c.tensor_mor[(f, g)])]
        rhs = c.compose[(c.tensor_mor[(g, f)], c.braiding[(a, b)])]
        if lhs != rhs:
            bad.append(f"braiding not natural at ({f},{g})")
    return bad


def picard_check(c: FiniteSMC) -> tuple[bool, list[str]]:
    """Is the category a Picard groupoid: all morphisms invertible and the
    tensor a group on isomorphism classes?"""
    reasons: list[str] = []
    for f, (a, b) in sorted(c.profile.items()):
        if not any(c.compose.get((g, f)) == c.identities[a]
                   and c.compose.get((f, g)) == c.identities[b]
                   for g in c.homs(b, a)):
            reasons.append(f"morphism {f} is not invertible")
    rep = {o: o for o in c.objects}
    for a, b in itertools.combinations(sorted(c.objects), 2):
        if c.homs(a, b):
            ra, rb = rep[a], rep[b]
            for o in c.objects:
                if rep[o] == rb:
                    rep[o] = ra
    classes = sorted(set(rep.values()))
    for a in classes:
        if not any(c.homs(c.tensor_obj[(a, b)], c.unit)
                   or rep[c.tensor_obj[(a, b)]] == rep[c.unit] for b in classes):
            reasons.append(f"isomorphism class of {a} has no tensor inverse")
    return (not reasons, reasons)


# ---------------------------------------------------------------------------
# operads
# ---------------------------------------------------------------------------

class FiniteOperad:
    """Interface: coloured operations with composition and symmetric action.

    Operations are hashable tokens; `op_profile` recovers (inputs, output).
    Permutations are tuples sigma with (sigma * f) having input i equal to
    input sigma[i] of f.
    """

    colours: tuple[str, ...]

    def operations(self, inputs: tuple[str, ...], output: str) -> tuple:
        raise NotImplementedError

    def op_profile(self, op) -> Profile:
        raise NotImplementedError

    def identity(self, colour: str):
        raise NotImplementedError

    def compose(self, f, i: int, g):
        """Partial composition: plug g into input i (0-based) of f."""
        raise NotImplementedError

    def permute(self, f, sigma: tuple[int, ...]):
        raise NotImplementedError


@dataclass(frozen=True)
class TableOperad(FiniteOperad):
    """An operad given by explicit finite tables.

    Missing profiles are empty.  `composition` maps (f, i, g) to the
    composite; `symmetry` maps (f, sigma) to the permuted operation.
    """
    colours: tuple[str, ...]
    profiles: dict[Hashable, Profile] = field(default_factory=dict)
    identities_table: dict[str, Hashable] = field(default_factory=dict)
    composition: dict[tuple[Hashable, int, Hashable], Hashable] = field(default_factory=dict)
    symmetry: dict[tuple[Hashable, tuple[int, ...]], Hashable] = field(default_factory=dict)

    def operations(self, inputs, output):
        return tuple(op for op, prof in sorted(self.profiles.items(), key=lambda kv: str(kv[0]))
                     if prof == (tuple(inputs), output))

    def op_profile(self, op):
        return self.profiles[op]

    def identity(self, colour):
        return self.identities_table[colour]

    def compose(self, f, i, g):
        try:
            return self.composition[(f, i, g)]
        except KeyError:
            raise KeyError(f"composition table has no entry for ({f}, {i}, {g})") from None

    def permute(self, f, sigma):
        sigma = tuple(sigma)
        if sigma == tuple(range(len(sigma))):
            return f
        try:
            return self.symmetry[(f, sigma)]
        except KeyError:
            raise KeyError(f"symmetry table has no entry for ({f}, {sigma})") from None


class SMCOperad(FiniteOperad):
    """The operad of a finite strict symmetric monoidal category.

    An operation is the token (inputs, output, morphism) where the morphism
    runs from the chosen tensor of the inputs to the output.  Tables are
    computed on demand, so all arities are available.
    """

    def __init__(self, smc: FiniteSMC, name: str = "O_C"):
        self.smc = smc
        self.name = name
        self.colours = tuple(smc.objects)
        self._perm_iso = lru_cache(maxsize=None)(smc.permutation_iso)
        self._homs: dict[tuple[str, str], tuple[str, ...]] = {}
        for m, (d, c) in sorted(smc.profile.items()):
            self._homs.setdefault((d, c), ())
            self._homs[(d, c)] += (m,)
        self.operations = lru_cache(maxsize=None)(self._operations)
        self.compose = lru_cache(maxsize=None)(self._compose)
        self.permute = lru_cache(maxsize=None)(self._permute)

    def _operations(self, inputs, output):
        inputs = tuple(inputs)
        dom = self.smc.tensor_objects(inputs)
        return tuple((inputs, output, m)
                     for m in self._homs.get((dom, output), ()))

    def op_profile(self, op):
        return (op[0], op[1])

    def identity(self, colour):
        return ((colour,), colour, self.smc.identities[colour])

    def _compose(self, f, i, g):
        fin, fout, fm = f
        gin, gout, gm = g
        if not 0 <= i < len(fin) or fin[i] != gout:
            raise ValueError(f"cannot plug {g} into input {i} of {f}")
        left = self.smc.identities[self.smc.tensor_objects(fin[:i])]
        right = self.smc.identities[self.smc.tensor_objects(fin[i + 1:])]
        whisk = self.smc.tensor_mor[(self.smc.tensor_mor[(left, gm)], right)]
        new_in = fin[:i] + gin + fin[i + 1:]
        return (new_in, fout, self.smc.compose[(fm, whisk)])

    def _permute(self, f, sigma):
        fin, fout, fm = f
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(len(fin))):
            raise ValueError(f"{sigma} is not a permutation of the inputs of {f}")
        new_in = tuple(fin[s] for s in sigma)
        iso = self._perm_iso(fin, sigma)   # tensor(new_in) -> tensor(fin)
        return (new_in, fout, self.smc.compose[(fm, iso)])

    def __repr__(self):
        return f"SMCOperad({self.name})"


# ---------------------------------------------------------------------------
# operad validation
# ---------------------------------------------------------------------------

def _profiles_upto(colours: Sequence[str], max_arity: int):
    for n in range(max_arity + 1):
        for inputs in itertools.product(colours, repeat=n):
            for output in colours:
                yield inputs, output


def _expand_permutation(sigma: tuple[int, ...], i: int, m: int) -> tuple[int, ...]:
    """The permutation induced on the inputs of f o_i g by sigma on f."""
    out: list[int] = []
    for s in sigma:
        if s < i:
            out.append(s)
        elif s == i:
            out.extend(range(i, i + m))
        else:
            out.append(s + m - 1)
    return tuple(out)


def validate_operad(p: FiniteOperad, max_arity: int = 3) -> list[str]:
    """Check operad axioms on all operations of arity <= max_arity.

    Exhaustive within the arity bound: profile consistency, unit laws, both
    associativity shapes, and equivariance of composition under the
    symmetric group actions.  Each violation names the failing instance.
    """
    bad: list[str] = []
    ops: list = []
    for inputs, output in _profiles_upto(p.colours, max_arity):
        for op in p.operations(inputs, output):
            if p.op_profile(op) != (inputs, output):
                bad.append(f"operation {op} listed under wrong profile {(inputs, output)}")
            ops.append(op)
    for c in p.colours:
        i = p.identity(c)
        if p.op_profile(i) != ((c,), c):
            bad.append(f"identity of colour {c} has wrong profile")
    for f in ops:
        fin, fout = p.op_profile(f)
        for i, c in enumerate(fin):
            if p.compose(f, i, p.identity(c)) != f:
                bad.append(f"unit law fails: {f} o_{i} id_{c}")
        if p.compose(p.identity(fout), 0, f) != f:
            bad.append(f"unit law fails: id_{fout} o_0 {f}")
    for f in ops:
        fin, _ = p.op_profile(f)
        for i, ci in enumerate(fin):
            for g in ops:
                gin, gout = p.op_profile(g)
                if gout != ci:
                    continue
                fg = p.compose(f, i, g)
                # nested shape
                for j, cj in enumerate(gin):
                    for h in ops:
                        if p.op_profile(h)[1] != cj:
                            continue
                        if p.compose(fg, i + j, h) != p.compose(f, i, p.compose(g, j, h)):
                            bad.append(f"associativity (nested) fails: ({f} o_{i} {g}) o_{i+j} {h}")
                # parallel shape
                for j in range(i + 1, len(fin)):
                    for h in ops:
                        hin, hout = p.op_profile(h)
                        if hout != fin[j]:
                            continue
                        lhs = p.compose(fg, j + len(gin) - 1, h)
                        rhs = p.compose(p.compose(f, j, h), i, g)
                        if lhs != rhs:
                            bad.append(f"associativity (parallel) fails: {f} o_{i} {g}, o_{j} {h}")
                # equivariance: permute f, then compose
                for sigma in itertools.permutations(range(len(fin))):
                    pos = sigma.index(i)
                    lhs = p.compose(p.permute(f, sigma), pos, g)
                    rhs = p.permute(fg, _expand_permutation(sigma, i, len(gin)))
                    if lhs != rhs:
                        bad.append(f"equivariance fails: sigma={sigma}, {f} o_{i} {g}")
    for f in ops:
        n = len(p.op_profile(f)[0])
        for sigma in itertools.permutations(range(n)):
            sf = p.permute(f, sigma)
            want = tuple(p.op_profile(f)[0][s] for s in sigma)
            if p.op_profile(sf) != (want, p.op_profile(f)[1]):
                bad.append(f"symmetry action breaks profile: sigma={sigma} on {f}")
            for tau in itertools.permutations(range(n)):
                comp = tuple(sigma[t] for t in tau)
                if p.permute(sf, tau) != p.permute(f, comp):
                    bad.append(f"symmetry action not functorial: {tau} after {sigma} on {f}")
    return bad


def table_operad_from(p: FiniteOperad, max_arity: int = 3) -> TableOperad:
    """Materialize explicit tables from any operad, up to an arity bound.

    Composition entries are kept when both factors and the result stay
    within the bound; used for serialization and fault injection.
    """
    profiles: dict = {}
    for inputs, output in _profiles_upto(p.colours, max_arity):
        for op in p.operations(inputs, output):
            profiles[op] = (tuple(inputs), output)
    composition: dict = {}
    symmetry: dict = {}
    for f, (fin, fout) in profiles.items():
        for i, ci in enumerate(fin):
            for g, (gin, gout) in profiles.items():
                if gout != ci or len(fin) + len(gin) - 1 > max_arity:
                    continue
                composition[(f, i, g)] = p.compose(f, i, g)
        for sigma in itertools.permutations(range(len(fin))):
            symmetry[(f, sigma)] = p.permute(f, sigma)
    identities = {c: p.identity(c) for c in p.colours}
    return TableOperad(colours=tuple(p.colours), profiles=profiles,
                       identities_table=identities, composition=composition,
                       symmetry=symmetry)


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

def discrete_abelian_smc(elements: Sequence[Hashable], add) -> FiniteSMC:
    """The discrete symmetric monoidal category of a finite abelian group:
    only identity morphisms, tensor given by the group law."""
    for a in elements:
        if not any(all(add(add(a, b), x) == x for x in elements) for b in elements):
            raise ValueError(f"element {a!r} has no inverse; not a group")
    return discrete_commutative_monoid_smc(elements, add)


def cyclic_group_smc(n: int) -> FiniteSMC:
    return discrete_abelian_smc(range(n), lambda a, b: (a + b) % n)


def klein_four_smc() -> FiniteSMC:
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return discrete_abelian_smc(
        ["".join(map(str, e)) for e in elems],
        lambda a, b: "".join(str((int(x) + int(y)) % 2) for x, y in zip(a, b)))


def one_object_abelian_group_smc(elements: Sequence[Hashable], add) -> FiniteSMC:
    """One object *, hom set a finite abelian group, tensor = group law on
    morphisms and the identity symmetry.  Symmetric monoidal because the
    group is abelian."""
    obj = "*"
    names = {e: f"g{e}" for e in elements}
    zero = next(e for e in elements if all(add(e, x) == x for x in elements))
    profile = {names[e]: (obj, obj) for e in elements}
    compose = {(names[a], names[b]): names[add(a, b)] for a in elements for b in elements}
    ident = {obj: names[zero]}
    t_obj = {(obj, obj): obj}
    t_mor = {(names[a], names[b]): names[add(a, b)] for a in elements for b in elements}
    braid = {(obj, obj): names[zero]}
    return FiniteSMC(objects=(obj,), unit=obj, profile=profile, compose=compose,
                     identities=ident, tensor_obj=t_obj, tensor_mor=t_mor,
                     braiding=braid)


def b_z2_smc() -> FiniteSMC:
    return one_object_abelian_group_smc([0, 1], lambda a, b: (a + b) % 2)


def discrete_commutative_monoid_smc(elements: Sequence[Hashable], mul) -> FiniteSMC:
    """Discrete category on the elements of a commutative monoid, tensor
    given by the monoid law; symmetric monoidal but not a groupoid unless
    the monoid is a group."""
    unit = next(e for e in elements if all(mul(e, x) == x for x in elements))
    objs = tuple(str(e) for e in elements)
    lookup = {str(e): e for e in elements}
    ident = {o: f"id_{o}" for o in objs}
    profile = {ident[o]: (o, o) for o in objs}
    compose = {(ident[o], ident[o]): ident[o] for o in objs}
    t_obj = {(a, b): str(mul(lookup[a], lookup[b])) for a in objs for b in objs}
    t_mor = {(ident[a], ident[b]): ident[t_obj[(a, b)]] for a in objs for b in objs}
    braid = {(a, b): ident[t_obj[(a, b)]] for a in objs for b in objs}
    return FiniteSMC(objects=objs, unit=str(unit), profile=profile, compose=compose,
                     identities=ident, tensor_obj=t_obj, tensor_mor=t_mor,
                     braiding=braid)


def mult_01_monoid_smc() -> FiniteSMC:
    return discrete_commutative_monoid_smc([0, 1], lambda a, b: a * b)


def operad_from_smc(c: FiniteSMC, name: str = "O_C") -> SMCOperad:
    return SMCOperad(c, name=name)


CORPUS = {
    "z2": lambda: operad_from_smc(cyclic_group_smc(2), "O_{Z/2}"),
    "z3": lambda: operad_from_smc(cyclic_group_smc(3), "O_{Z/3}"),
    "z4": lambda: operad_from_smc(cyclic_group_smc(4), "O_{Z/4}"),
    "z2xz2": lambda: operad_from_smc(klein_four_smc(), "O_{Z/2xZ/2}"),
    "bz2": lambda: operad_from_smc(b_z2_smc(), "O_{BZ/2}"),
    "mult01": lambda: operad_from_smc(mult_01_monoid_smc(), "O_{(0,1)x}"),
}
