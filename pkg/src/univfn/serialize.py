"""JSON forms of tables, witness bundles and reports.

Every natural number is written as a decimal string; witness values are far
beyond 64 bits.  Structural counts (dims, coordinates, arities) stay JSON ints.
Output is compact with sorted keys, so identical inputs give identical bytes.
"""
import json
import re
import sys

try:  # GMP converts million-digit decimals in milliseconds; CPython 3.10 is quadratic
    import gmpy2
except ImportError:  # pragma: no cover
    gmpy2 = None

from .combinators import Construction
from .evaluators import from_json as evaluator_from_json
from .tables import FinTable, WitnessMap

_DECIMAL = re.compile(r"[0-9]+")


def allow_big_decimals() -> None:
    # str(int) / int(str) refuse long inputs by default on newer CPythons
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def to_decimal(n: int) -> str:
    if gmpy2 is not None and n.bit_length() > 4096:
        return gmpy2.mpz(n).digits(10)
    allow_big_decimals()
    return str(n)


def _from_decimal(text: str) -> int:
    if gmpy2 is not None and len(text) > 1000:
        return int(gmpy2.mpz(text, 10))
    allow_big_decimals()
    return int(text)


def parse_nat(text) -> int:
    if isinstance(text, bool):
        raise ValueError(f"not a natural number: {text!r}")
    if isinstance(text, int):
        if text < 0:
            raise ValueError(f"not a natural number: {text!r}")
        return text
    if not isinstance(text, str) or not _DECIMAL.fullmatch(text):
        raise ValueError(f"not a decimal natural number: {text!r}")
    return _from_decimal(text)


def _int_list(xs, what):
    if not isinstance(xs, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in xs):
        raise ValueError(f"{what} must be a list of integers")
    return xs


def table_to_json(T: FinTable) -> dict:
    return {"dims": list(T.dims), "values": [to_decimal(v) for v in T.values]}


def table_from_json(d, cls=FinTable) -> FinTable:
    if not isinstance(d, dict) or "dims" not in d or "values" not in d:
        raise ValueError("a table needs 'dims' and 'values'")
    dims = _int_list(d["dims"], "dims")
    if not isinstance(d["values"], list):
        raise ValueError("'values' must be a list")
    return cls(tuple(dims), tuple(parse_nat(v) for v in d["values"]))


def bundle_to_json(c: Construction) -> dict:
    return {
        "evaluator": c.evaluator.to_json(),
        "witnesses": {
            "maps": {name: table_to_json(m) for name, m in c.maps.items()},
            "slots": [{"map": name, "coords": list(coords)} for name, coords in c.slots],
        },
    }


def bundle_from_json(d) -> Construction:
    try:
        ev = evaluator_from_json(d["evaluator"])
        w = d["witnesses"]
        maps = {name: table_from_json(m, WitnessMap) for name, m in w["maps"].items()}
        slots = [(s["map"], _int_list(s["coords"], "coords")) for s in w["slots"]]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed witness bundle: {exc}") from None
    return Construction(ev, maps, slots)


def dumps(obj) -> str:
    allow_big_decimals()
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))

