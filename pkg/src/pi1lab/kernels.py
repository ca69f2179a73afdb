"""Kernel backend selection.

At import time the compiled extension is preferred when present; setting
``PI1LAB_PURE=1`` forces the pure-Python twin. Both backends are exact
integer arithmetic and produce bit-identical results, so the choice never
affects any decision or report byte — only speed.
"""
import os

if os.environ.get("PI1LAB_PURE") == "1":
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

SEG_NONE = _impl.SEG_NONE
SEG_POINT = _impl.SEG_POINT
SEG_OVERLAP = _impl.SEG_OVERLAP

rred = _impl.rred
rcmp = _impl.rcmp
radd = _impl.radd
rsub = _impl.rsub
rmul = _impl.rmul
rdiv = _impl.rdiv
orient = _impl.orient
point_eq = _impl.point_eq
point_dist_sq = _impl.point_dist_sq
on_segment = _impl.on_segment
lerp = _impl.lerp
foot_param = _impl.foot_param
point_seg_dist_sq = _impl.point_seg_dist_sq
seg_intersect = _impl.seg_intersect
seg_seg_dist_sq = _impl.seg_seg_dist_sq
