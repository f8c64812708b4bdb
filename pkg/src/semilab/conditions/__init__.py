from semilab.conditions.compression import CompressionDescriptor, compression_descriptor
from semilab.conditions.probes import (
    find_disjoint_pair,
    is_disjoint_pair,
    is_ore_witness,
    ore_and_reversibility_probe,
    ore_probe,
    quasi_lattice_probe,
    reversibility_probe,
)
from semilab.conditions.toeplitz import (
    ToeplitzResult,
    letter_shape,
    replays_compression,
    toeplitz_decompose,
    toeplitz_probe,
)


__all__ = [
    "CompressionDescriptor",
    "ToeplitzResult",
    "compression_descriptor",
    "find_disjoint_pair",
    "is_disjoint_pair",
    "is_ore_witness",
    "letter_shape",
    "ore_and_reversibility_probe",
    "ore_probe",
    "quasi_lattice_probe",
    "replays_compression",
    "reversibility_probe",
    "toeplitz_decompose",
    "toeplitz_probe",
]
