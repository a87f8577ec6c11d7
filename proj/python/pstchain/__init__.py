"""Exact perfect-state-transfer certification for q-Racah and para q-Racah XX chains."""

import json as _json

from ._pstchain import (  # noqa: F401
    Chain,
    Eigen,
    PstError,
    Quad,
    build_from_spectrum,
    build_para_chain,
    build_qracah_chain,
    cheb_u,
    check_inequality_para,
    check_inequality_qracah,
    check_persymmetry,
    check_ratio_condition_para,
    eigh,
    eigh_tridiagonal,
    fidelity_trace,
    max_transfer_probability,
    mirror_check,
    q_from_m,
    time_grid,
    transfer_amplitude,
    unitarity_defect,
)
from . import _pstchain

__version__ = _pstchain.__version__


def certify(chain):
    """Exact certificate of ``chain`` as a dict (same keys as the chain file)."""
    return _json.loads(_pstchain.certify_json(chain))


def build_chain(family, m, M0, M1, N, M2=None, T=None):
    kw = {} if T is None else {"T": T}
    if family == "qracah":
        return build_qracah_chain(m, M0, M1, N, **kw)
    if family == "para":
        if M2 is None:
            raise ValueError("the para family needs M2")
        return build_para_chain(m, M0, M1, M2, N, **kw)
    raise ValueError(f"unknown family {family!r}")


def scan(request, workers=0):
    """Run a scan request (dict or JSON text); returns (csv_text, summary_dict)."""
    text = request if isinstance(request, str) else _json.dumps(request)
    csv_text, summary = _pstchain.scan_json(text, workers)
    return csv_text, _json.loads(summary)
