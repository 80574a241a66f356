"""Configuration settings for shift analysis.

SEARCH BOUNDS SUMMARY:
=====================
The period searches are exhaustive only up to explicit bounds. The defaults
below keep the full verification run desk-scale (a few minutes on a laptop):

- Sequential period search: periods 1..16 (necklace representatives only)
- Descriptive period search: forbidden word lengths 1..8, at most 20
  candidate words per exhaustive subset search
- Exact Perron root isolation: strongly connected blocks up to 64 states

Every verdict produced under these bounds records the bounds it used.
"""

from dataclasses import asdict, dataclass
from typing import Optional


@dataclass
class SearchConfig:
    """Bounds for the periodic-point and descriptive-period searches."""
    max_period: int = 16  # Largest period tried by t_seq and realized_periods
    max_len: int = 8  # Largest forbidden-word length tried by t_desc_search
    subset_budget: int = 20  # Largest candidate set searched exhaustively
    max_desc_period: Optional[int] = None  # Largest T* tried (None = spec period)
    max_cycle: int = 16  # Largest label period tried by the cycle search


@dataclass
class SpectralConfig:
    """Configuration for characteristic polynomials and entropy."""
    tolerance: float = 1e-12  # Bisection tolerance for the Perron root
    exact_root_limit: int = 64  # Largest SCC handled by exact root isolation


@dataclass
class LanguageConfig:
    """Configuration for block-language cross-checks."""
    crosscheck_limit: int = 12  # Cap on the product-of-states length bound


@dataclass
class FamilyConfig:
    """Configuration for the family generators."""
    max_factorial_k: int = 3  # Largest k for theorem8_spec without force


@dataclass
class VerificationConfig:
    """Configuration for the verification suites.

    Defaults: 50 random binary SFTs for the irreducibility and subgraph
    suites, 1,000 random walks for the terminal-state property, and 20
    random spec pairs for the equality cross-check.
    """
    random_seed: int = 42
    sft_corpus_size: int = 50
    ternary_corpus_size: int = 20
    random_paths: int = 1000
    random_pairs: int = 20
    theorem8_k: int = 2


@dataclass
class PftConfig:
    """Main configuration."""
    search: SearchConfig = None
    spectral: SpectralConfig = None
    language: LanguageConfig = None
    families: FamilyConfig = None
    verification: VerificationConfig = None

    def __post_init__(self):
        if self.search is None:
            self.search = SearchConfig()
        if self.spectral is None:
            self.spectral = SpectralConfig()
        if self.language is None:
            self.language = LanguageConfig()
        if self.families is None:
            self.families = FamilyConfig()
        if self.verification is None:
            self.verification = VerificationConfig()

    # Global settings
    verbose: bool = False

    @classmethod
    def load_from_file(cls, config_path: str) -> 'PftConfig':
        """Load configuration from YAML file.

        Sections missing from the file keep their defaults; unknown keys
        inside a section are rejected.
        """
        try:
            import yaml
            from pathlib import Path

            config_file = Path(config_path)
            if not config_file.exists():
                raise FileNotFoundError(f"Configuration file not found: {config_path}")

            with open(config_file, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f) or {}

            config = cls()
            sections = {
                'search': SearchConfig,
                'spectral': SpectralConfig,
                'language': LanguageConfig,
                'families': FamilyConfig,
                'verification': VerificationConfig,
            }
            for name, section_cls in sections.items():
                if name in data:
                    setattr(config, name, section_cls(**(data[name] or {})))

            if 'global' in data:
                config.verbose = bool(data['global'].get('verbose', False))

            return config

        except ImportError:
            raise ImportError("PyYAML required for config file loading. Install with: pip install PyYAML")
        except Exception as e:
            raise ValueError(f"Failed to load configuration from {config_path}: {e}")

    def save_to_file(self, config_path: str) -> None:
        """Save configuration to YAML file."""
        try:
            import yaml
            from pathlib import Path

            config_dict = {
                'search': asdict(self.search),
                'spectral': asdict(self.spectral),
                'language': asdict(self.language),
                'families': asdict(self.families),
                'verification': asdict(self.verification),
                'global': {
                    'verbose': self.verbose
                }
            }

            config_file = Path(config_path)
            config_file.parent.mkdir(parents=True, exist_ok=True)

            with open(config_file, 'w', encoding='utf-8') as f:
                yaml.dump(config_dict, f, default_flow_style=False, indent=2)

        except ImportError:
            raise ImportError("PyYAML required for config file saving. Install with: pip install PyYAML")
        except Exception as e:
            raise ValueError(f"Failed to save configuration to {config_path}: {e}")


# Default configuration instance
DEFAULT_CONFIG = PftConfig()
