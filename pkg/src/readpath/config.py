"""Engine configuration: one JSON document, strictly validated.

Unknown keys are rejected rather than ignored so that a typo like
"dampening" fails loudly instead of silently running with the default.
Relative paths resolve against the directory holding the config file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

from .scoring import ScoreParams
from .seeding import TerminalMode


class ConfigError(Exception):
    pass


def _check_keys(section: str, doc: dict, allowed: set[str]) -> None:
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError(f"unknown keys in {section}: {', '.join(unknown)}")


def _get(doc: dict, key: str, kind, section: str, default=None, required=False):
    if key not in doc:
        if required:
            raise ConfigError(f"{section}.{key} is required")
        return default
    val = doc[key]
    if val is None and not required:
        return default
    if kind is float and isinstance(val, int) and not isinstance(val, bool):
        val = float(val)
    if not isinstance(val, kind) or isinstance(val, bool) and kind is not bool:
        raise ConfigError(f"{section}.{key} must be {kind.__name__}, got {type(val).__name__}")
    return val


@dataclass(frozen=True)
class SeedSourceConfig:
    provider: str = "offline"
    path: str | None = None
    url_template: str | None = None
    response_path: str = "results"
    id_field: str = "id"

    @staticmethod
    def from_dict(doc: dict, base: Path) -> "SeedSourceConfig":
        _check_keys("seeds", doc, {"provider", "path", "url_template", "response_path", "id_field"})
        provider = _get(doc, "provider", str, "seeds", default="offline")
        if provider not in ("offline", "http"):
            raise ConfigError(f"seeds.provider must be 'offline' or 'http', got {provider!r}")
        path = _get(doc, "path", str, "seeds")
        if provider == "offline":
            if path is None:
                raise ConfigError("seeds.path is required for the offline provider")
            path = str((base / path).resolve())
        url_template = _get(doc, "url_template", str, "seeds")
        if provider == "http" and url_template is None:
            raise ConfigError("seeds.url_template is required for the http provider")
        return SeedSourceConfig(
            provider=provider,
            path=path,
            url_template=url_template,
            response_path=_get(doc, "response_path", str, "seeds", default="results"),
            id_field=_get(doc, "id_field", str, "seeds", default="id"),
        )


@dataclass(frozen=True)
class QueryDefaults:
    expansion_order: int = 2
    expansion_direction: str = "out"
    terminal_mode: TerminalMode = TerminalMode.REALLOCATED
    cooccurrence_threshold: int = 2
    k_seeds: int = 30
    k_output: int = 30
    cutoff_year: int | None = None
    missing_venue_score: float = 0.1

    @staticmethod
    def from_dict(doc: dict) -> "QueryDefaults":
        _check_keys(
            "query",
            doc,
            {
                "expansion_order",
                "expansion_direction",
                "terminal_mode",
                "cooccurrence_threshold",
                "k_seeds",
                "k_output",
                "cutoff_year",
                "missing_venue_score",
            },
        )
        mode_name = _get(doc, "terminal_mode", str, "query", default="reallocated")
        try:
            mode = TerminalMode(mode_name)
        except ValueError:
            names = ", ".join(m.value for m in TerminalMode)
            raise ConfigError(f"query.terminal_mode must be one of: {names}") from None
        order = _get(doc, "expansion_order", int, "query", default=2)
        if order not in (1, 2):
            raise ConfigError(f"query.expansion_order must be 1 or 2, got {order}")
        direction = _get(doc, "expansion_direction", str, "query", default="out")
        if direction not in ("out", "both"):
            raise ConfigError("query.expansion_direction must be 'out' or 'both'")
        k_seeds = _get(doc, "k_seeds", int, "query", default=30)
        if k_seeds < 1:
            raise ConfigError(f"query.k_seeds must be >= 1, got {k_seeds}")
        k_output = _get(doc, "k_output", int, "query", default=30)
        if k_output < 1:
            raise ConfigError(f"query.k_output must be >= 1, got {k_output}")
        threshold = _get(doc, "cooccurrence_threshold", int, "query", default=2)
        if threshold < 1:
            raise ConfigError(f"query.cooccurrence_threshold must be >= 1, got {threshold}")
        return QueryDefaults(
            expansion_order=order,
            expansion_direction=direction,
            terminal_mode=mode,
            cooccurrence_threshold=threshold,
            k_seeds=k_seeds,
            k_output=k_output,
            cutoff_year=_get(doc, "cutoff_year", int, "query"),
            missing_venue_score=_get(doc, "missing_venue_score", float, "query", default=0.1),
        )


@dataclass(frozen=True)
class ServiceConfig:
    bind_address: str = "127.0.0.1:8000"
    cors_origins: tuple[str, ...] = ("*",)

    @property
    def host(self) -> str:
        return self.bind_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.bind_address.rsplit(":", 1)[1])

    @staticmethod
    def from_dict(doc: dict) -> "ServiceConfig":
        _check_keys("service", doc, {"bind_address", "cors_origins"})
        addr = _get(doc, "bind_address", str, "service", default="127.0.0.1:8000")
        host, sep, port = addr.rpartition(":")
        if not sep or not host or not port.isdigit():
            raise ConfigError(f"service.bind_address must look like host:port, got {addr!r}")
        origins = doc.get("cors_origins", ["*"])
        if not isinstance(origins, list) or not all(isinstance(o, str) for o in origins):
            raise ConfigError("service.cors_origins must be a list of strings")
        return ServiceConfig(bind_address=addr, cors_origins=tuple(origins))


@dataclass(frozen=True)
class EngineConfig:
    papers_path: str
    venues_path: str
    seed_source: SeedSourceConfig = field(default_factory=SeedSourceConfig)
    params: ScoreParams = field(default_factory=ScoreParams)
    query: QueryDefaults = field(default_factory=QueryDefaults)
    service: ServiceConfig = field(default_factory=ServiceConfig)

    @staticmethod
    def from_file(path: str | Path) -> "EngineConfig":
        path = Path(path)
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
        return EngineConfig.from_dict(doc, base_dir=path.parent)

    @staticmethod
    def from_dict(doc: dict, base_dir: str | Path = ".") -> "EngineConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config root must be a JSON object")
        base = Path(base_dir)
        _check_keys("config", doc, {"corpus", "seeds", "params", "query", "service"})

        corpus = doc.get("corpus")
        if not isinstance(corpus, dict):
            raise ConfigError("config.corpus section is required")
        _check_keys("corpus", corpus, {"papers", "venues"})
        papers = _get(corpus, "papers", str, "corpus", required=True)
        venues = _get(corpus, "venues", str, "corpus", required=True)

        params_doc = doc.get("params", {})
        if not isinstance(params_doc, dict):
            raise ConfigError("config.params must be an object")
        allowed = {f.name for f in fields(ScoreParams)}
        _check_keys("params", params_doc, allowed)
        kwargs = {}
        for f in fields(ScoreParams):
            if f.name in params_doc:
                kind = int if f.name == "pr_max_iters" else float
                kwargs[f.name] = _get(params_doc, f.name, kind, "params")
        try:
            params = ScoreParams(**kwargs)
        except Exception as exc:
            raise ConfigError(f"invalid params: {exc}") from exc

        seeds_doc = doc.get("seeds", {"provider": "offline", "path": "seeds.json"})
        if not isinstance(seeds_doc, dict):
            raise ConfigError("config.seeds must be an object")
        query_doc = doc.get("query", {})
        if not isinstance(query_doc, dict):
            raise ConfigError("config.query must be an object")
        service_doc = doc.get("service", {})
        if not isinstance(service_doc, dict):
            raise ConfigError("config.service must be an object")

        return EngineConfig(
            papers_path=str((base / papers).resolve()),
            venues_path=str((base / venues).resolve()),
            seed_source=SeedSourceConfig.from_dict(seeds_doc, base),
            params=params,
            query=QueryDefaults.from_dict(query_doc),
            service=ServiceConfig.from_dict(service_doc),
        )
