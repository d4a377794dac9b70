import json
import os

SEED_ENV_VAR = "COLEMBED_SEED"


class ColembedConfig:

    def __init__(self, data: dict):
        # Seeds
        self.default_seed = None
        # Embedder
        self.restarts = 10
        self.max_resamples_factor = 100
        self.scan_order = "firstFound"
        # Enumeration limits
        self.oracle_search_limit = 10 ** 8
        self.exact_enumeration_limit = 10 ** 7
        # Negative dependency verifier
        self.negdep_injection_limit = 10 ** 6
        self.negdep_exhaustive_subset_size = 4
        self.negdep_sampled_subsets = 1000
        # Hypergraph constants, derived from the explicit counts when None
        self.hyper_c1 = None
        self.hyper_c2 = None
        # Random colorings
        self.local_coloring_probes = 8
        # Run transcript
        self.transcript_path = None
        self.transcript_max_mb = 10
        # Prometheus
        self.metrics_port = None
        # Load user inputs from config file
        self.update(data)

    def update(self, data: dict):
        self.__dict__.update(data)

    def get_default_seed(self):
        if self.default_seed is None:
            return None
        return int(self.default_seed)

    @staticmethod
    def load(additional_config: dict = None, file_path: str = "colembed.json"):
        config_raw = dict()

        if os.path.isfile(file_path):
            with open(file_path, "r") as config_file:
                config_raw = json.loads(config_file.read())

        config = ColembedConfig(config_raw)
        env_seed = os.getenv(SEED_ENV_VAR)
        if env_seed:
            config.update({'default_seed': int(env_seed)})
        if additional_config is not None:
            config.update(additional_config)

        return config
