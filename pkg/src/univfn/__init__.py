"""Explicit universal functions on the naturals, with exact witness synthesis.

``f_univ`` represents every binary function on a finite grid as
``f_univ(g(x), h(y))``; the combinators lift that to higher arities,
patterns of inner witnesses, products and the additive form ``k(x + y)``.
Everything is checked cell by cell with exact integer arithmetic.
"""
from .combinators import (
    Construction,
    WitnessBundle,
    f_dim3,
    product_universal,
    synth_32,
    synth_32_from_42,
    synth_42,
    synth_42_from_32,
    synth_additive,
    synth_dim3,
    synth_dim_n,
    synth_sigma,
    widen_sigma,
)
from .core import f_single, f_univ, synth_two, to_single
from .pairing import (
    compress_even,
    compress_odd,
    pair,
    pair_tuple,
    spread_even,
    spread_odd,
    unpair,
    unpair_tuple,
)
from .seqcodec import rho, seq_decode, seq_encode
from .sigma import Classification, SigmaSpec, Verdict, classify, downward_closure, remove_subsumed
from .tables import FinTable, ShapeError, WitnessMap
from .verifier import VerifyReport, check, finite_no_universal, verify

__version__ = "0.1.0"
