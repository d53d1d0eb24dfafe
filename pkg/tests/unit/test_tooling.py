import configparser
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]


class TestCoverageSettings:
    """The test runner script and pytest.ini ask for the same coverage."""

    def setup_method(self):
        config = configparser.ConfigParser()
        config.read(ROOT / "pytest.ini")
        self.addopts = config["pytest"]["addopts"].split()
        self.runner = (ROOT / "scripts" / "run_tests.py").read_text(encoding="utf-8")

    def test_same_coverage_options(self):
        coverage = [option for option in self.addopts if option.startswith("--cov")]
        assert "--cov=monitoring" in coverage
        for option in coverage:
            assert f'"{option}"' in self.runner, option
