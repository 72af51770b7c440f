"""Configuration management for rlcongest."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any

import yaml

ENV_PREFIX = "RLCONGEST_"
LOCK_NAME = ".rlcongest.lock"
MANIFEST_NAME = "manifest.json"

BACKENDS = ("tree", "direct")


@dataclass
class Config:
    """Configuration for rlcongest runs."""

    # Reproducibility
    seed: int = 1

    # Resource limits
    width: int = 1
    kappa: float = 8.0
    tuple_budget: int = 10**6
    max_rounds: int = 100_000

    # Frozen round-bound constants: wl (a, b, c), virtual node (b', c'), tree slack c0
    wl_bound: tuple[int, int, int] = (3, 2, 8)
    vnode_bound: tuple[int, int] = (2, 6)
    tree_slack: int = 2

    # Numerical tolerances
    predicate_tol: float = 1e-6
    matrix_tol: float = 1e-9
    eig_cutoff: float = 1e-9

    # Routing
    backend: str = "tree"
    tokens_per_node: int = 4  # L
    overlay_delta: float = 0.5

    # Execution settings
    threads: int = 1  # node-level parallelism inside one simulator round
    parallel_jobs: int = 4  # experiment / scan cells

    # Paths
    output_dir: Path | None = None

    @classmethod
    def load(
        cls,
        config_file: Path | None = None,
        cli_args: dict[str, Any] | None = None,
    ) -> Config:
        """Load config with precedence: CLI > env > file > defaults."""
        config = cls()

        # 1. Load from file
        if config_file and config_file.exists():
            config = cls._merge_yaml(config, config_file)

        # 2. Apply environment variables
        config = cls._merge_env(config)

        # 3. Apply CLI arguments (highest precedence)
        if cli_args:
            config = cls._merge_cli(config, cli_args)

        return config

    def to_dict(self) -> dict[str, Any]:
        """Plain-JSON view for run manifests."""
        data = asdict(self)
        data["output_dir"] = str(self.output_dir) if self.output_dir else None
        data["wl_bound"] = list(self.wl_bound)
        data["vnode_bound"] = list(self.vnode_bound)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Config:
        """Rebuild a Config from its manifest form, ignoring unknown keys."""
        known = {f.name for f in fields(cls)}
        values = {k: v for k, v in data.items() if k in known}
        for name in ("wl_bound", "vnode_bound"):
            if name in values:
                values[name] = tuple(int(v) for v in values[name])
        if values.get("output_dir"):
            values["output_dir"] = Path(values["output_dir"])
        return cls(**values)

    def with_overrides(self, cli_args: dict[str, Any]) -> Config:
        """Copy with CLI arguments applied on top."""
        return self._merge_cli(replace(self), cli_args)

    @classmethod
    def _merge_yaml(cls, config: Config, config_file: Path) -> Config:
        """Merge configuration from YAML file."""
        with open(config_file) as f:
            data = yaml.safe_load(f)

        if not data:
            return config

        if "seed" in data:
            config.seed = int(data["seed"])
        if "width" in data:
            config.width = int(data["width"])
        if "kappa" in data:
            config.kappa = float(data["kappa"])
        if "tuple_budget" in data:
            config.tuple_budget = int(data["tuple_budget"])
        if "max_rounds" in data:
            config.max_rounds = int(data["max_rounds"])
        if "wl_bound" in data:
            config.wl_bound = tuple(int(v) for v in data["wl_bound"])
        if "vnode_bound" in data:
            config.vnode_bound = tuple(int(v) for v in data["vnode_bound"])
        if "tree_slack" in data:
            config.tree_slack = int(data["tree_slack"])
        if "predicate_tol" in data:
            config.predicate_tol = float(data["predicate_tol"])
        if "matrix_tol" in data:
            config.matrix_tol = float(data["matrix_tol"])
        if "eig_cutoff" in data:
            config.eig_cutoff = float(data["eig_cutoff"])
        if "backend" in data:
            config.backend = str(data["backend"])
        if "tokens_per_node" in data:
            config.tokens_per_node = int(data["tokens_per_node"])
        if "overlay_delta" in data:
            config.overlay_delta = float(data["overlay_delta"])
        if "threads" in data:
            config.threads = int(data["threads"])
        if "parallel_jobs" in data:
            config.parallel_jobs = int(data["parallel_jobs"])
        if "output_dir" in data:
            config.output_dir = Path(data["output_dir"]).expanduser()

        return config

    @classmethod
    def _merge_env(cls, config: Config) -> Config:
        """Merge configuration from environment variables."""
        if val := os.environ.get(f"{ENV_PREFIX}SEED"):
            config.seed = int(val)
        if val := os.environ.get(f"{ENV_PREFIX}WIDTH"):
            config.width = int(val)
        if val := os.environ.get(f"{ENV_PREFIX}KAPPA"):
            config.kappa = float(val)
        if val := os.environ.get(f"{ENV_PREFIX}BACKEND"):
            config.backend = val
        if val := os.environ.get(f"{ENV_PREFIX}OUTPUT_DIR"):
            config.output_dir = Path(val).expanduser()
        if val := os.environ.get(f"{ENV_PREFIX}PARALLEL_JOBS"):
            config.parallel_jobs = int(val)
        if val := os.environ.get(f"{ENV_PREFIX}THREADS"):
            config.threads = int(val)
        if val := os.environ.get(f"{ENV_PREFIX}MAX_ROUNDS"):
            config.max_rounds = int(val)

        return config

    @classmethod
    def _merge_cli(cls, config: Config, cli_args: dict[str, Any]) -> Config:
        """Merge configuration from CLI arguments."""
        if cli_args.get("seed") is not None:
            config.seed = int(cli_args["seed"])
        if cli_args.get("width") is not None:
            config.width = int(cli_args["width"])
        if cli_args.get("kappa") is not None:
            config.kappa = float(cli_args["kappa"])
        if cli_args.get("backend"):
            config.backend = cli_args["backend"]
        if cli_args.get("tokens_per_node") is not None:
            config.tokens_per_node = int(cli_args["tokens_per_node"])
        if cli_args.get("overlay_delta") is not None:
            config.overlay_delta = float(cli_args["overlay_delta"])
        if cli_args.get("max_rounds") is not None:
            config.max_rounds = int(cli_args["max_rounds"])
        if cli_args.get("threads") is not None:
            config.threads = int(cli_args["threads"])
        if cli_args.get("parallel_jobs") is not None:
            config.parallel_jobs = int(cli_args["parallel_jobs"])
        if cli_args.get("output_dir"):
            config.output_dir = Path(cli_args["output_dir"]).expanduser()

        return config
