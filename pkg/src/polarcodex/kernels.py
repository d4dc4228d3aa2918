"""Rank-kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twin.
Set POLAR_CODEX_PURE=1 to force the fallback (used by the benchmark).
"""

import os

if os.environ.get("POLAR_CODEX_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
chain_ranks = _impl.chain_ranks
rank_gf2_rows = _impl.rank_gf2_rows
rank_gfp = _impl.rank_gfp

__all__ = ["BACKEND", "chain_ranks", "rank_gf2_rows", "rank_gfp"]
