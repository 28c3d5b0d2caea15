"""JSON forms of bases, scalars, automorphisms, specs, and vectors.

Bases are tagged records: {"kind": "gf", "p", "n", "modulus"} |
{"kind": "real"|"complex", "tolerance"} | {"kind": "dickson9"}.  Galois
scalars are coefficient arrays (constant term first), reals are numbers,
complexes are [re, im] pairs.  Automorphisms: {"kind": "fpow"|"rpow",
"alpha"} | {"kind": "ceps", "alpha": [re, im], "conj"} | {"kind": "perm",
"table": [[in, out], ...]} | {"kind": "inner", "gamma"} | {"kind": "comp",
"factors": [...]}.  A space file is {"base", "index", "sigma", "rho"}; a
vector is {"entries": {label: scalar}}.
"""

from .errors import NearVecError
from .mult_auto import (
    CompAuto,
    ComplexEps,
    FinitePower,
    InnerAuto,
    PermAuto,
    RealPower,
)
from .nearfield import (
    ComplexField,
    Dickson9,
    GaloisField,
    RealField,
)
from .nvspace import SparseVector, SpaceSpec


def base_to_json(base):
    return base.describe()


def base_from_json(obj, tolerance=None):
    kind = obj.get("kind")
    if kind == "gf":
        base = GaloisField.of(int(obj["p"]), int(obj["n"]))
        given = obj.get("modulus")
        if given is not None and [int(c) for c in given] != list(base.table.modulus):
            raise NearVecError(
                f"modulus {given} does not match the deterministic table "
                f"{list(base.table.modulus)}"
            )
        return base
    if kind == "dickson9":
        return Dickson9()
    if kind == "real":
        return RealField(tolerance or obj.get("tolerance", 1e-9))
    if kind == "complex":
        return ComplexField(tolerance or obj.get("tolerance", 1e-9))
    raise NearVecError(f"unknown base kind {kind!r}")


def scalar_to_json(base, x):
    if hasattr(x, "coeffs"):
        return list(x.coeffs)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def scalar_from_json(base, obj):
    if base.kind in ("gf", "dickson9"):
        return base.table.element(obj)
    if base.kind == "real":
        return base.check(float(obj))
    if base.kind == "complex":
        if isinstance(obj, (list, tuple)):
            return complex(obj[0], obj[1])
        return base.check(obj)
    raise NearVecError(f"cannot decode scalar for {base!r}")


def auto_to_json(auto):
    return auto.describe()


def auto_from_json(base, obj):
    kind = obj.get("kind")
    if kind == "fpow":
        return FinitePower(base, int(obj["alpha"]))
    if kind == "rpow":
        return RealPower(base, float(obj["alpha"]))
    if kind == "ceps":
        a = obj["alpha"]
        return ComplexEps(base, complex(a[0], a[1]), bool(obj.get("conj", False)))
    if kind == "perm":
        table = {
            scalar_from_json(base, pair[0]): scalar_from_json(base, pair[1])
            for pair in obj["table"]
        }
        return PermAuto(base, table)
    if kind == "inner":
        return InnerAuto(base, scalar_from_json(base, obj["gamma"]))
    if kind == "comp":
        return CompAuto(base, [auto_from_json(base, f) for f in obj["factors"]])
    raise NearVecError(f"unknown automorphism kind {kind!r}")


def spec_to_json(spec: SpaceSpec):
    return spec.describe()


def spec_from_json(obj, tolerance=None) -> SpaceSpec:
    base = base_from_json(obj["base"], tolerance=tolerance)
    index = [str(k) for k in obj["index"]]
    sigma = {k: auto_from_json(base, obj["sigma"][k]) for k in index}
    rho = {k: auto_from_json(base, obj["rho"][k]) for k in index}
    spec = SpaceSpec(base, sigma, rho)
    if list(spec.index) != sorted(index):
        raise NearVecError("index does not match sigma/rho labels")
    return spec


def vector_to_json(base, v: SparseVector):
    return {"entries": {k: scalar_to_json(base, x) for k, x in v}}


def vector_from_json(spec: SpaceSpec, obj) -> SparseVector:
    return spec.vector(
        {k: scalar_from_json(spec.base, x) for k, x in obj["entries"].items()}
    )
