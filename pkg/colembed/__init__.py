from .colembed import colembed_main
from .budget import ResampleBudget
from .embedder import embed, brute_force_embed
from .certifier import certify, threshold_k
from .oracle import validate, exists_colored_copy
