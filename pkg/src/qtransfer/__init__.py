"""qtransfer: exact q-arithmetic for Iwahori-center transfer maps,
symmetric-group Euler-Poincare combinatorics, and GL_n(F_q) class-function
identities.

Layering: :mod:`qtransfer.algebra` (scalars, partitions, symmetric
polynomials, q-counts) is the base; :mod:`qtransfer.transfer`,
:mod:`qtransfer.weylcomb`, and :mod:`qtransfer.finitegl` build on it;
:mod:`qtransfer.epfun` ties the last two together; :mod:`qtransfer.cli`
exposes everything.
"""

from . import algebra, epfun, finitegl, transfer, weylcomb
from .algebra import QScalar, SymPoly
from .epfun import DParahoricType, ParahoricCombo, ep_function, f_J, product_ep
from .finitegl import GLGroup, cached_group
from .transfer import TransferParams, transfer_sym

__version__ = "0.1.0"

__all__ = [
    "algebra", "transfer", "weylcomb", "finitegl", "epfun",
    "QScalar", "SymPoly", "TransferParams", "transfer_sym",
    "GLGroup", "cached_group",
    "ParahoricCombo", "DParahoricType", "ep_function", "product_ep", "f_J",
    "__version__",
]
