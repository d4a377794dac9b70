from .colembed_config import ColembedConfig
