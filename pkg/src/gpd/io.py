"""JSON files for groupoids, strict morphisms, generalized morphisms and rosters.

Paths inside a file are resolved relative to that file's directory.
"""

import json
from pathlib import Path

from .core import FiniteGroupoid, validate
from .functors import StrictMorphism
from .morphisms import GenMorphism, MorRoster


class FormatError(Exception):
    """Unreadable file or malformed structure (as opposed to invalid mathematics)."""

    def as_dict(self):
        return {"error": "FormatError", "message": str(self), "witness": None}


def _read_text(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from e


def _parse(text, path):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e


def _read(path):
    return _parse(_read_text(path), path)


def _field(data, key, path):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"{path}: missing field {key!r}")
    return data[key]


def _resolve(base, rel):
    p = Path(rel)
    return p if p.is_absolute() else Path(base).parent / p


# groupoids referenced from several files should load as one object
_cache = {}


def groupoid_from_data(data, path="<data>"):
    n = _field(data, "objects", path)
    arrows = _field(data, "arrows", path)
    compose = _field(data, "compose", path)
    try:
        arrows = [tuple(a) for a in arrows]
        compose = [tuple(c) for c in compose]
        if any(len(a) != 2 for a in arrows) or any(len(c) != 3 for c in compose):
            raise ValueError
    except (TypeError, ValueError) as e:
        raise FormatError(f"{path}: arrows must be pairs and compose entries triples") from e
    return validate(n, arrows, compose, name=data.get("name", ""))


def load_groupoid(path):
    text = _read_text(path)
    if text not in _cache:
        _cache[text] = groupoid_from_data(_parse(text, path), path)
    return _cache[text]


def load_morphism(path):
    data = _read(path)
    dom = load_groupoid(_resolve(path, _field(data, "dom", path)))
    cod = load_groupoid(_resolve(path, _field(data, "cod", path)))
    return StrictMorphism(dom, cod, _field(data, "f0", path), _field(data, "f1", path))


def load_genmorphism(path):
    data = _read(path)
    psi = load_morphism(_resolve(path, _field(data, "psi", path)))
    u = load_morphism(_resolve(path, _field(data, "u", path)))
    k = load_groupoid(_resolve(path, _field(data, "k", path)))
    if not (psi.dom == k and u.dom == k):
        raise FormatError(f"{path}: psi and u must both start at k")
    return GenMorphism(psi, u, data.get("mode", "general"))


def load_roster(path):
    data = _read(path)
    if not isinstance(data, list) or not data:
        raise FormatError(f"{path}: a roster is a nonempty list of morphism paths")
    objs = [load_genmorphism(_resolve(path, p)) for p in data]
    return MorRoster(objs[0].G, objs[0].H, objs, objs[0].mode)


def _write(path, data):
    Path(path).write_text(json.dumps(data, indent=1) + "\n")
    return Path(path)


def dump_groupoid(g: FiniteGroupoid, path):
    return _write(path, g.to_raw())


def dump_morphism(f, path, dom_path, cod_path):
    base = Path(path).parent
    return _write(path, {
        "dom": _rel(dom_path, base),
        "cod": _rel(cod_path, base),
        "f0": list(f.f0),
        "f1": list(f.f1),
    })


def dump_genmorphism(m, stem, g_path, h_path):
    """Write ``stem.k.json``, ``stem.psi.json``, ``stem.u.json`` and ``stem.json``."""
    stem = Path(stem)
    k_path = dump_groupoid(m.K, stem.with_suffix(".k.json"))
    psi_path = dump_morphism(m.psi, stem.with_suffix(".psi.json"), k_path, g_path)
    u_path = dump_morphism(m.u, stem.with_suffix(".u.json"), k_path, h_path)
    base = stem.parent
    return _write(stem.with_suffix(".json"), {
        "psi": _rel(psi_path, base),
        "k": _rel(k_path, base),
        "u": _rel(u_path, base),
        "mode": m.mode,
    })


def _rel(path, base):
    try:
        return str(Path(path).resolve().relative_to(Path(base).resolve()))
    except ValueError:
        return str(Path(path).resolve())


def genmorphism_base_paths(path):
    """Paths of the source and target groupoid files of a generalized morphism file."""
    data = _read(path)
    psi_path = _resolve(path, _field(data, "psi", path))
    u_path = _resolve(path, _field(data, "u", path))
    g = _resolve(psi_path, _field(_read(psi_path), "cod", psi_path))
    h = _resolve(u_path, _field(_read(u_path), "cod", u_path))
    return g, h


def dump_decode(path, objects, arrows=None):
    data = {"objects": [_plain(o) for o in objects]}
    if arrows is not None:
        data["arrows"] = [_plain(a) for a in arrows]
    return _write(path, data)


def _plain(t):
    return [_plain(v) for v in t] if isinstance(t, tuple) else t
