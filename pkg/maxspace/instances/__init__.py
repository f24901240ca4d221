from .bpplib import BppClass, from_bpplib, load_bpplib
from .codec import (
    read_instance, write_instance, load_instance, save_instance, read_solution, write_solution
)
from .generator import (
    Dims, STANDARD_DIMS, SizeClass, FreqClass, ProfitClass, WindowClass, GeneratorSpec,
    generate, all_class_specs, generate_batch, load_manifest
)
