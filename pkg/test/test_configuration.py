import json
import os
import tempfile
import unittest
from unittest import mock

from colembed.configuration import ColembedConfig
from colembed.configuration.colembed_config import SEED_ENV_VAR
from colembed.models import EmbedConfig, RAINBOW
from colembed.seeding import resolve_seed, spawn_rngs


class ColembedConfigTests(unittest.TestCase):

    def setUp(self):
        self.config = ColembedConfig({})

    def test_defaults(self):
        self.assertEqual(10, self.config.restarts)
        self.assertEqual(100, self.config.max_resamples_factor)
        self.assertIsNone(self.config.get_default_seed())
        self.assertIsNone(self.config.transcript_path)

    def test_update(self):
        self.config.update({'restarts': 3, 'default_seed': "17"})
        self.assertEqual(3, self.config.restarts)
        self.assertEqual(17, self.config.get_default_seed())

    def test_load_file_and_overrides(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "colembed.json")
            with open(path, "w") as config_file:
                json.dump({'restarts': 4, 'scan_order': "random"}, config_file)
            with mock.patch.dict(os.environ, {SEED_ENV_VAR: ""}):
                config = ColembedConfig.load({'restarts': 5}, file_path=path)
        self.assertEqual(5, config.restarts, msg="explicit overrides beat the file")
        self.assertEqual("random", config.scan_order)

    def test_missing_file(self):
        config = ColembedConfig.load(file_path=os.path.join(tempfile.gettempdir(), "no-such-colembed.json"))
        self.assertEqual(10, config.restarts)

    def test_seed_from_environment(self):
        with mock.patch.dict(os.environ, {SEED_ENV_VAR: "99"}):
            config = ColembedConfig.load(file_path="no-such-colembed.json")
        self.assertEqual(99, config.get_default_seed())
        self.assertEqual(99, resolve_seed(None, config))
        self.assertEqual(5, resolve_seed(5, config))


class EmbedConfigTests(unittest.TestCase):

    def test_from_config(self):
        config = ColembedConfig({'restarts': 7, 'default_seed': 3})
        embed_config = EmbedConfig.from_config(config, mode=RAINBOW, restarts=None)
        self.assertEqual((RAINBOW, 7, 3), (embed_config.mode, embed_config.restarts, embed_config.seed))

    def test_invalid_values(self):
        with self.assertRaises(ValueError):
            EmbedConfig(max_resamples=0)
        with self.assertRaises(ValueError):
            EmbedConfig(mode="canonical")
        with self.assertRaises(ValueError):
            EmbedConfig(restarts=0)


class SeedingTests(unittest.TestCase):

    def test_fresh_seeds_differ(self):
        self.assertNotEqual(resolve_seed(None), resolve_seed(None))

    def test_spawned_streams_are_reproducible(self):
        first = [rng.integers(10 ** 9) for rng in spawn_rngs(11, 3)]
        second = [rng.integers(10 ** 9) for rng in spawn_rngs(11, 3)]
        self.assertEqual(first, second)
        self.assertEqual(3, len(set(first)))


if __name__ == '__main__':
    unittest.main()
