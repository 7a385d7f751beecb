"""torusgit: exact semistability analysis for maximal-torus actions.

Subpackages split along the pipeline: exact LP with certificates
(:mod:`torusgit.ratlp`), root-system data (:mod:`torusgit.rootsys`),
the Weyl group (:mod:`torusgit.weyl`), polarization-character search
(:mod:`torusgit.polarization`), Hilbert-Mumford classification on the
flag variety (:mod:`torusgit.stability`) and the wonderful-
compactification bookkeeping (:mod:`torusgit.wonderful`).  The
``torusgit`` console script in :mod:`torusgit.cli` emits machine-
readable verification reports.
"""

__version__ = "0.1.0"

REPORT_FORMAT_VERSION = 1
