"""JSON serialization for trees, operads, monoidal categories, certificates
and Kan reports.

Loading validates against the published schemas and reports violations with
the JSON path of the offending field.  Emission is deterministic (sorted
keys, fixed element order), so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .anodyne import (AnodyneClass, Certificate, HornStep, NestedStep,
                      certificate_class, class_phrase, parse_class)
from .kan import KanReport
from .operads import (CORPUS, FiniteOperad, FiniteSMC, SMCOperad, TableOperad,
                      table_operad_from)
from .trees import Tree, TreeError, Vertex


class SchemaError(ValueError):
    """A JSON document does not match its schema; `path` pinpoints where."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


_TYPE_NAMES = {dict: "object", list: "array", str: "string", int: "integer",
               bool: "boolean"}


def _as(value, typ, path: str):
    if typ is int and isinstance(value, bool):
        raise SchemaError(path, "expected integer, got boolean")
    if not isinstance(value, typ):
        raise SchemaError(path, f"expected {_TYPE_NAMES[typ]}, "
                                f"got {type(value).__name__}")
    return value


def _field(data: dict, key: str, typ, path: str):
    if key not in data:
        raise SchemaError(path, f"missing field {key!r}")
    return _as(data[key], typ, f"{path}.{key}")


def _string_list(value, path: str) -> list[str]:
    _as(value, list, path)
    return [_as(x, str, f"{path}[{i}]") for i, x in enumerate(value)]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def tree_to_json(tree: Tree) -> dict:
    return {"edges": sorted(tree.edges),
            "vertices": [{"inputs": list(v.inputs), "output": v.output}
                         for v in sorted(tree.vertices, key=lambda v: v.output)],
            "root": tree.root}


def tree_from_json(data, path: str = "$") -> Tree:
    _as(data, dict, path)
    edges = _string_list(_field(data, "edges", list, path), f"{path}.edges")
    root = _field(data, "root", str, path)
    raw = _field(data, "vertices", list, path)
    vertices = []
    for i, v in enumerate(raw):
        vp = f"{path}.vertices[{i}]"
        _as(v, dict, vp)
        inputs = _string_list(_field(v, "inputs", list, vp), f"{vp}.inputs")
        output = _field(v, "output", str, vp)
        vertices.append(Vertex(tuple(inputs), output))
    try:
        tree = Tree(tuple(vertices), root)
    except TreeError as exc:
        raise SchemaError(path, str(exc)) from None
    if set(edges) != set(tree.edges):
        raise SchemaError(f"{path}.edges",
                          "edge list disagrees with the vertex data")
    return tree


# ---------------------------------------------------------------------------
# operads and monoidal categories
# ---------------------------------------------------------------------------

def operad_to_json(p: FiniteOperad, max_arity: int = 3) -> dict:
    if not isinstance(p, TableOperad):
        p = table_operad_from(p, max_arity)
    ops = sorted(p.profiles, key=str)
    if all(isinstance(o, str) for o in ops) and len(set(ops)) == len(ops):
        name = {o: o for o in ops}
    else:
        name = {o: f"o{i}" for i, o in enumerate(ops)}
    return {
        "colours": sorted(p.colours),
        "operations": [{"name": name[o], "inputs": list(p.profiles[o][0]),
                        "output": p.profiles[o][1]} for o in ops],
        "identities": {c: name[i] for c, i in sorted(p.identities_table.items())},
        "composition": [{"f": name[f], "i": i, "g": name[g], "result": name[h]}
                        for (f, i, g), h in sorted(p.composition.items(),
                                                   key=lambda kv: (str(kv[0][0]), kv[0][1], str(kv[0][2])))],
        "symmetry": [{"f": name[f], "sigma": list(s), "result": name[g]}
                     for (f, s), g in sorted(p.symmetry.items(),
                                             key=lambda kv: (str(kv[0][0]), kv[0][1]))],
    }


def operad_from_json(data, path: str = "$") -> TableOperad:
    _as(data, dict, path)
    colours = _string_list(_field(data, "colours", list, path), f"{path}.colours")
    profiles: dict = {}
    for i, op in enumerate(_field(data, "operations", list, path)):
        op_path = f"{path}.operations[{i}]"
        _as(op, dict, op_path)
        nm = _field(op, "name", str, op_path)
        if nm in profiles:
            raise SchemaError(f"{op_path}.name", f"duplicate operation name {nm!r}")
        inputs = _string_list(_field(op, "inputs", list, op_path), f"{op_path}.inputs")
        output = _field(op, "output", str, op_path)
        for j, c in enumerate(inputs + [output]):
            if c not in colours:
                raise SchemaError(op_path, f"unknown colour {c!r}")
        profiles[nm] = (tuple(inputs), output)

    def known(nm, p):
        if nm not in profiles:
            raise SchemaError(p, f"unknown operation {nm!r}")
        return nm

    identities = {}
    ids = _field(data, "identities", dict, path)
    for c, nm in sorted(ids.items()):
        ip = f"{path}.identities.{c}"
        if c not in colours:
            raise SchemaError(ip, f"unknown colour {c!r}")
        identities[c] = known(_as(nm, str, ip), ip)
    missing = [c for c in colours if c not in identities]
    if missing:
        raise SchemaError(f"{path}.identities", f"no identity for colours {missing}")
    composition = {}
    for i, row in enumerate(_field(data, "composition", list, path)):
        rp = f"{path}.composition[{i}]"
        _as(row, dict, rp)
        f = known(_field(row, "f", str, rp), f"{rp}.f")
        g = known(_field(row, "g", str, rp), f"{rp}.g")
        h = known(_field(row, "result", str, rp), f"{rp}.result")
        pos = _field(row, "i", int, rp)
        if not 0 <= pos < len(profiles[f][0]):
            raise SchemaError(f"{rp}.i", f"input index {pos} out of range for {f!r}")
        composition[(f, pos, g)] = h
    symmetry = {}
    for i, row in enumerate(_field(data, "symmetry", list, path)):
        rp = f"{path}.symmetry[{i}]"
        _as(row, dict, rp)
        f = known(_field(row, "f", str, rp), f"{rp}.f")
        g = known(_field(row, "result", str, rp), f"{rp}.result")
        sigma = _field(row, "sigma", list, rp)
        sigma = tuple(_as(x, int, f"{rp}.sigma[{j}]") for j, x in enumerate(sigma))
        if sorted(sigma) != list(range(len(profiles[f][0]))):
            raise SchemaError(f"{rp}.sigma", f"not a permutation of the inputs of {f!r}")
        symmetry[(f, sigma)] = g
    return TableOperad(colours=tuple(colours), profiles=profiles,
                       identities_table=identities, composition=composition,
                       symmetry=symmetry)


def smc_to_json(c: FiniteSMC) -> dict:
    return {
        "objects": sorted(c.objects),
        "unit": c.unit,
        "morphisms": [{"name": m, "dom": d, "cod": co}
                      for m, (d, co) in sorted(c.profile.items())],
        "identities": dict(sorted(c.identities.items())),
        "compose": [{"g": g, "f": f, "result": h}
                    for (g, f), h in sorted(c.compose.items())],
        "tensor_objects": [{"a": a, "b": b, "result": r}
                           for (a, b), r in sorted(c.tensor_obj.items())],
        "tensor_morphisms": [{"f": f, "g": g, "result": r}
                             for (f, g), r in sorted(c.tensor_mor.items())],
        "braiding": [{"a": a, "b": b, "result": r}
                     for (a, b), r in sorted(c.braiding.items())],
    }


def smc_from_json(data, path: str = "$") -> FiniteSMC:
    _as(data, dict, path)
    objects = _string_list(_field(data, "objects", list, path), f"{path}.objects")
    unit = _field(data, "unit", str, path)
    profile: dict[str, tuple[str, str]] = {}
    for i, m in enumerate(_field(data, "morphisms", list, path)):
        mp = f"{path}.morphisms[{i}]"
        _as(m, dict, mp)
        nm = _field(m, "name", str, mp)
        if nm in profile:
            raise SchemaError(f"{mp}.name", f"duplicate morphism name {nm!r}")
        dom, cod = _field(m, "dom", str, mp), _field(m, "cod", str, mp)
        for o in (dom, cod):
            if o not in objects:
                raise SchemaError(mp, f"unknown object {o!r}")
        profile[nm] = (dom, cod)

    def mor(nm, p):
        if nm not in profile:
            raise SchemaError(p, f"unknown morphism {nm!r}")
        return nm

    def obj(o, p):
        if o not in objects:
            raise SchemaError(p, f"unknown object {o!r}")
        return o

    identities = {obj(o, f"{path}.identities.{o}"): mor(_as(m, str, f"{path}.identities.{o}"), f"{path}.identities.{o}")
                  for o, m in sorted(_field(data, "identities", dict, path).items())}
    compose = {}
    for i, row in enumerate(_field(data, "compose", list, path)):
        rp = f"{path}.compose[{i}]"
        _as(row, dict, rp)
        compose[(mor(_field(row, "g", str, rp), f"{rp}.g"),
                 mor(_field(row, "f", str, rp), f"{rp}.f"))] = \
            mor(_field(row, "result", str, rp), f"{rp}.result")
    t_obj = {}
    for i, row in enumerate(_field(data, "tensor_objects", list, path)):
        rp = f"{path}.tensor_objects[{i}]"
        _as(row, dict, rp)
        t_obj[(obj(_field(row, "a", str, rp), f"{rp}.a"),
               obj(_field(row, "b", str, rp), f"{rp}.b"))] = \
            obj(_field(row, "result", str, rp), f"{rp}.result")
    t_mor = {}
    for i, row in enumerate(_field(data, "tensor_morphisms", list, path)):
        rp = f"{path}.tensor_morphisms[{i}]"
        _as(row, dict, rp)
        t_mor[(mor(_field(row, "f", str, rp), f"{rp}.f"),
               mor(_field(row, "g", str, rp), f"{rp}.g"))] = \
            mor(_field(row, "result", str, rp), f"{rp}.result")
    braid = {}
    for i, row in enumerate(_field(data, "braiding", list, path)):
        rp = f"{path}.braiding[{i}]"
        _as(row, dict, rp)
        braid[(obj(_field(row, "a", str, rp), f"{rp}.a"),
               obj(_field(row, "b", str, rp), f"{rp}.b"))] = \
            mor(_field(row, "result", str, rp), f"{rp}.result")
    if unit not in objects:
        raise SchemaError(f"{path}.unit", f"unknown object {unit!r}")
    return FiniteSMC(objects=tuple(objects), unit=unit, profile=profile,
                     compose=compose, identities=identities, tensor_obj=t_obj,
                     tensor_mor=t_mor, braiding=braid)


def load_operad(data, path: str = "$") -> FiniteOperad:
    """Accepts an explicit operad table, a monoidal category (yielding its
    operad), or {"corpus": name} naming a built-in example."""
    _as(data, dict, path)
    if "corpus" in data:
        name = _as(data["corpus"], str, f"{path}.corpus")
        if name not in CORPUS:
            raise SchemaError(f"{path}.corpus",
                              f"unknown corpus operad {name!r}; "
                              f"choices: {', '.join(sorted(CORPUS))}")
        return CORPUS[name]()
    if "objects" in data:
        return SMCOperad(smc_from_json(data, path))
    if "colours" in data:
        return operad_from_json(data, path)
    raise SchemaError(path, "expected an operad table ('colours'), a monoidal "
                            "category ('objects') or a corpus reference")


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def certificate_to_json(cert: Certificate) -> dict:
    cls = certificate_class(cert)
    out = {"ambient": [tree_to_json(g) for g in cert.ambient_generators],
           "start": [sorted(c) for c in cert.start],
           "target": [sorted(c) for c in cert.target],
           "class": class_phrase(cls) if cls is not None else None}
    if cert.kind == "retract":
        out["steps"] = [{"type": "retract",
                         "sub": certificate_to_json(cert.sub),
                         "section": [list(p) for p in cert.section],
                         "retraction": [list(p) for p in cert.retraction]}]
        return out
    steps = []
    for step in cert.steps:
        if isinstance(step, HornStep):
            steps.append({"type": "horn",
                          "additions": [{"cell": sorted(step.cell),
                                         "omit": list(step.omitted)}]})
        else:
            steps.append({"type": "nested", "cell": sorted(step.cell),
                          "certificate": certificate_to_json(step.certificate)})
    out["steps"] = steps
    return out


def _cell_from_json(value, path: str) -> frozenset:
    return frozenset(_string_list(value, path))


def _omit_from_json(value, path: str) -> tuple[str, str]:
    parts = _string_list(value, path)
    if len(parts) != 2:
        raise SchemaError(path, "expected a [kind, label] pair")
    if parts[0] not in ("inner", "top", "root", "colour"):
        raise SchemaError(f"{path}[0]", f"unknown face kind {parts[0]!r}")
    return (parts[0], parts[1])


def certificate_from_json(data, path: str = "$") -> Certificate:
    _as(data, dict, path)
    generators = tuple(tree_from_json(t, f"{path}.ambient[{i}]")
                       for i, t in enumerate(_field(data, "ambient", list, path)))
    start = tuple(_cell_from_json(c, f"{path}.start[{i}]")
                  for i, c in enumerate(_field(data, "start", list, path)))
    target = tuple(_cell_from_json(c, f"{path}.target[{i}]")
                   for i, c in enumerate(_field(data, "target", list, path)))
    if "class" in data and data["class"] is not None:
        try:
            parse_class(_as(data["class"], str, f"{path}.class"))
        except ValueError as exc:
            raise SchemaError(f"{path}.class", str(exc)) from None
    raw_steps = _field(data, "steps", list, path)
    steps: list = []
    for i, s in enumerate(raw_steps):
        sp = f"{path}.steps[{i}]"
        _as(s, dict, sp)
        kind = _field(s, "type", str, sp)
        if kind == "retract":
            if len(raw_steps) != 1:
                raise SchemaError(sp, "a retract must be the only step")
            sub = certificate_from_json(_field(s, "sub", dict, sp), f"{sp}.sub")
            section = tuple(_pair_from_json(p, f"{sp}.section[{j}]")
                            for j, p in enumerate(_field(s, "section", list, sp)))
            retraction = tuple(_pair_from_json(p, f"{sp}.retraction[{j}]")
                               for j, p in enumerate(_field(s, "retraction", list, sp)))
            return Certificate(ambient_generators=generators, start=start,
                               target=target, kind="retract", sub=sub,
                               section=section, retraction=retraction)
        if kind == "horn":
            for j, add in enumerate(_field(s, "additions", list, sp)):
                ap = f"{sp}.additions[{j}]"
                _as(add, dict, ap)
                steps.append(HornStep(
                    _cell_from_json(_field(add, "cell", list, ap), f"{ap}.cell"),
                    _omit_from_json(_field(add, "omit", list, ap), f"{ap}.omit")))
        elif kind == "nested":
            steps.append(NestedStep(
                _cell_from_json(_field(s, "cell", list, sp), f"{sp}.cell"),
                certificate_from_json(_field(s, "certificate", dict, sp),
                                      f"{sp}.certificate")))
        else:
            raise SchemaError(f"{sp}.type", f"unknown step type {kind!r}")
    return Certificate(ambient_generators=generators, start=start,
                       target=target, kind="filtration", steps=tuple(steps))


def _pair_from_json(value, path: str) -> tuple[str, str]:
    parts = _string_list(value, path)
    if len(parts) != 2:
        raise SchemaError(path, "expected an [edge, edge] pair")
    return (parts[0], parts[1])


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def kan_report_to_json(rep: KanReport) -> dict:
    witnesses = []
    for w in rep.witnesses:
        witnesses.append({
            "tree": tree_to_json(w.tree),
            "omitted": list(w.omitted),
            "horn_class": w.horn_class,
            "issue": w.issue,
            "filler_count": w.filler_count,
            "horn_map": [{"face": list(key),
                          "colours": dict(sorted(d.edge_colours.items())),
                          "operations": {out: str(op) for out, op
                                         in sorted(d.vertex_ops.items())}}
                         for key, d in sorted(w.horn_map.assignment)],
        })
    return {"operad": rep.operad_name, "max_vertices": rep.max_vertices,
            "max_arity": rep.max_arity, "inner_kan": rep.inner_kan,
            "dendroidal_kan": rep.dendroidal_kan, "fully_kan": rep.fully_kan,
            "strict": rep.strict, "fully_unique": rep.fully_unique,
            "horns_checked": rep.horns_checked, "witnesses": witnesses}
