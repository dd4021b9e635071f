"""dualsim: dual-paradigm quantum circuit simulator.

Simulates gate-model quantum circuits in two paradigms behind one circuit
DSL: discrete-variable qubit registers evolved as dense statevectors, and
continuous-variable qumode registers in a Fock basis truncated at a cutoff
dimension.  Exposed as a library, an HTTP service (:mod:`dualsim.api`) and a
CLI (:mod:`dualsim.cli`).
"""

__version__ = "0.1.0"

from .circuit import (
    Circuit,
    CircuitError,
    Diagnostic,
    Instruction,
    MeasureDirective,
    Preparation,
    Register,
    execute,
    parse,
    serialize,
    validate,
)
from .linalg import (
    angle,
    distance,
    equal_up_to_global_phase,
    expm,
    expm_taylor,
    kron,
    multi_kron,
)
from .measure import (
    MeasurementResult,
    Observable,
    expectation,
    expectation_all,
    expectation_product,
    observable,
    probabilities,
    sample,
    variance,
    variance_all,
)
from .qubits import (
    QubitGate,
    QubitRegister,
    apply,
    controlled_unitary,
    embed_gate,
    standard_gate,
    zero_register,
)
from .qumodes import (
    CvGate,
    LadderOps,
    QumodeRegister,
    beamsplitter,
    displacement,
    interferometer,
    ladder_ops,
    leakage,
    prepare_squeezed_vacuum,
    rotation,
    squeezed_vacuum_deficit,
    squeezer,
    vacuum_register,
)
from .rng import Rng
from .wigner import wigner, wigner_grid

__all__ = [
    "__version__",
    "Circuit",
    "CircuitError",
    "Diagnostic",
    "Instruction",
    "MeasureDirective",
    "Preparation",
    "Register",
    "execute",
    "parse",
    "serialize",
    "validate",
    "angle",
    "distance",
    "equal_up_to_global_phase",
    "expm",
    "expm_taylor",
    "kron",
    "multi_kron",
    "MeasurementResult",
    "Observable",
    "expectation",
    "expectation_all",
    "expectation_product",
    "observable",
    "probabilities",
    "sample",
    "variance",
    "variance_all",
    "QubitGate",
    "QubitRegister",
    "apply",
    "controlled_unitary",
    "embed_gate",
    "standard_gate",
    "zero_register",
    "CvGate",
    "LadderOps",
    "QumodeRegister",
    "beamsplitter",
    "displacement",
    "interferometer",
    "ladder_ops",
    "leakage",
    "prepare_squeezed_vacuum",
    "rotation",
    "squeezed_vacuum_deficit",
    "squeezer",
    "vacuum_register",
    "Rng",
    "wigner",
    "wigner_grid",
]
