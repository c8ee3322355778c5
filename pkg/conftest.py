# Test-harness environment: select numba's fork-safe threading layer before galois/numba load,
# so MultiProcUtil workers forked after earlier parallel kernels are not aborted by GNU OpenMP.
import os

os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")
