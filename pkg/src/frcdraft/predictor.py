"""Winner-prediction pipeline: feature building, training, CV, grid search.

A sample is 14 features, the red alliance's 7-indicator effectiveness vector
followed by the blue alliance's, with a binary red-won label. Tied matches
cannot be encoded and are dropped (counted). Model selection runs the full
hyperparameter grid with stratified 10-fold cross-validation and picks the
best mean accuracy, first-in-enumeration-order on ties.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, asdict

import numpy as np

from . import mlp
from .indicators import NUM_AXES
from .ingest import RED, TIE
from .mlp import DivergenceError, Network, ShapeError
from .profiles import MissingProfileError, ProfileSet, alliance_effectiveness

MODEL_FORMAT_VERSION = 1
NUM_FEATURES = 2 * NUM_AXES

# Hyperparameter grid mirroring the reference sweep: 4*2*3*2*2 = 96 combos.
DEFAULT_GRID = {
    "hidden_layers": [(50, 50, 50), (50, 100, 50), (100,), (50, 50, 50, 50)],
    "activation": ["tanh", "relu"],
    "solver": ["sgd", "adam", "lbfgs"],
    "alpha": [0.0001, 0.05],
    "learning_rate": ["constant", "adaptive"],
}
GRID_FIELD_ORDER = tuple(DEFAULT_GRID)


class TooFewSamplesError(Exception):
    pass


class FormatVersionError(Exception):
    pass


@dataclass(frozen=True)
class PredictionSample:
    features: np.ndarray  # 14 floats in [0,1]: red vector then blue vector
    label: int  # 1 = red won


@dataclass(frozen=True)
class ModelConfig:
    hidden_layers: tuple[int, ...] = (50, 50, 50, 50)
    activation: str = "tanh"
    solver: str = "adam"
    alpha: float = 0.0001
    learning_rate: str = "constant"
    learning_rate_init: float = 0.001
    batch_size: int = 64
    max_epochs: int = 500
    tol: float = 1e-4
    n_iter_no_change: int = 10
    momentum: float = 0.9
    seed: int = 0

    def __post_init__(self):
        if any(w < 1 for w in self.hidden_layers):
            raise ValueError(f"layer widths must be >= 1: {self.hidden_layers}")
        if self.max_epochs < 1:
            raise ValueError("max_epochs must be >= 1")


@dataclass
class TrainedModel:
    config: ModelConfig
    network: Network
    metadata: dict = field(default_factory=dict)


def build_training_set(datasets, profiles: ProfileSet) -> tuple[list[PredictionSample], int]:
    """One sample per non-tied match; returns (samples, dropped tie count)."""
    samples = []
    ties = 0
    for ds in datasets:
        for match in ds.matches:
            if match.winner == TIE:
                ties += 1
                continue
            red = alliance_effectiveness([profiles[t] for t in match.red_teams])
            blue = alliance_effectiveness([profiles[t] for t in match.blue_teams])
            samples.append(
                PredictionSample(
                    features=np.concatenate([red, blue]),
                    label=1 if match.winner == RED else 0,
                )
            )
    return samples, ties


def to_arrays(samples) -> tuple[np.ndarray, np.ndarray]:
    X = np.vstack([s.features for s in samples])
    y = np.array([s.label for s in samples], dtype=float)
    return X, y


def split_dataset(samples, fraction: float = 0.85, seed: int = 0):
    """Seeded shuffle split; train size is round(fraction * n), ties-to-even."""
    if len(samples) < 2:
        raise TooFewSamplesError("need at least 2 samples to split")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(samples))
    n_train = int(round(fraction * len(samples)))
    train = [samples[i] for i in order[:n_train]]
    test = [samples[i] for i in order[n_train:]]
    return train, test


def train(config: ModelConfig, train_set) -> TrainedModel:
    """Fit the MLP on the training samples; reproducible for a fixed seed."""
    X, y = to_arrays(train_set) if not isinstance(train_set, tuple) else train_set
    rng = np.random.default_rng(config.seed)
    net, meta = mlp.fit(X, y, config, rng)
    return TrainedModel(config=config, network=net, metadata=meta)


def predict(model: TrainedModel, red, blue) -> tuple[float, int]:
    """Win probability for red plus the thresholded binary label."""
    red = np.asarray(red, dtype=float)
    blue = np.asarray(blue, dtype=float)
    if red.shape != (NUM_AXES,) or blue.shape != (NUM_AXES,):
        raise ShapeError(
            f"expected two ({NUM_AXES},) vectors, got {red.shape} and {blue.shape}"
        )
    proba = float(model.network.predict_proba(np.concatenate([red, blue])[None, :])[0])
    return proba, int(proba > 0.5)


def accuracy(model: TrainedModel, samples) -> float:
    X, y = to_arrays(samples)
    proba = model.network.predict_proba(X)
    return float(np.mean((proba > 0.5) == (y > 0.5)))


def stratified_folds(labels, folds: int, seed: int) -> list[np.ndarray]:
    """Disjoint, exhaustive validation folds, label-balanced within one."""
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed)
    assignment = np.empty(len(labels), dtype=int)
    cursor = 0
    for cls in np.unique(labels):
        idx = np.flatnonzero(labels == cls)
        idx = idx[rng.permutation(len(idx))]
        for j, sample in enumerate(idx):
            assignment[sample] = (cursor + j) % folds
        cursor += len(idx)
    return [np.flatnonzero(assignment == f) for f in range(folds)]


@dataclass(frozen=True)
class CVResult:
    mean_accuracy: float
    fold_accuracies: tuple[float, ...]


def cross_validate(config: ModelConfig, samples, folds: int = 10, seed: int = 0) -> CVResult:
    if len(samples) < folds:
        raise TooFewSamplesError(f"{len(samples)} samples < {folds} folds")
    X, y = to_arrays(samples)
    fold_idx = stratified_folds(y, folds, seed)
    accs = []
    for f in range(folds):
        val = fold_idx[f]
        train_mask = np.ones(len(y), dtype=bool)
        train_mask[val] = False
        rng = np.random.default_rng(config.seed)
        net, _ = mlp.fit(X[train_mask], y[train_mask], config, rng)
        proba = net.predict_proba(X[val])
        accs.append(float(np.mean((proba > 0.5) == (y[val] > 0.5))))
    return CVResult(mean_accuracy=float(np.mean(accs)), fold_accuracies=tuple(accs))


def enumerate_grid(grid: dict) -> list[dict]:
    """Deterministic enumeration: itertools.product over the documented
    field order, values in listed order."""
    fields = [f for f in GRID_FIELD_ORDER if f in grid]
    extra = set(grid) - set(GRID_FIELD_ORDER)
    if extra:
        raise ValueError(f"unknown grid fields {sorted(extra)}")
    combos = []
    for values in itertools.product(*(grid[f] for f in fields)):
        combos.append(dict(zip(fields, values)))
    return combos


def grid_search(grid: dict, samples, seed: int = 0, folds: int = 10):
    """Cross-validate every grid combination; returns (best config, report).

    A combination whose training diverges scores 0 and carries the error in
    the report. Ties in mean accuracy go to the first combination in
    enumeration order.
    """
    combos = enumerate_grid(grid)
    if not combos:
        raise ValueError("empty grid")
    rows = []
    best_idx, best_acc = 0, -1.0
    for i, combo in enumerate(combos):
        hidden = combo.get("hidden_layers", (50, 50, 50, 50))
        config = ModelConfig(
            hidden_layers=tuple(hidden),
            activation=combo.get("activation", "tanh"),
            solver=combo.get("solver", "adam"),
            alpha=combo.get("alpha", 0.0001),
            learning_rate=combo.get("learning_rate", "constant"),
            seed=seed,
        )
        row = {"config": config_to_dict(config)}
        try:
            result = cross_validate(config, samples, folds=folds, seed=seed)
            row["mean_accuracy"] = result.mean_accuracy
            row["fold_accuracies"] = list(result.fold_accuracies)
        except DivergenceError as exc:
            row["mean_accuracy"] = 0.0
            row["fold_accuracies"] = []
            row["error"] = str(exc)
        if config.solver == "lbfgs":
            row["solver_note"] = mlp.LBFGS_NOTE
        rows.append(row)
        if row["mean_accuracy"] > best_acc:
            best_acc = row["mean_accuracy"]
            best_idx = i

    best = combos[best_idx]
    best_config = ModelConfig(
        hidden_layers=tuple(best.get("hidden_layers", (50, 50, 50, 50))),
        activation=best.get("activation", "tanh"),
        solver=best.get("solver", "adam"),
        alpha=best.get("alpha", 0.0001),
        learning_rate=best.get("learning_rate", "constant"),
        seed=seed,
    )
    report = {
        "folds": folds,
        "seed": seed,
        "combinations": rows,
        "best_index": best_idx,
        "best_config": config_to_dict(best_config),
        "best_mean_accuracy": best_acc,
    }
    return best_config, report


def config_to_dict(config: ModelConfig) -> dict:
    d = asdict(config)
    d["hidden_layers"] = list(config.hidden_layers)
    return d


def config_from_dict(d: dict) -> ModelConfig:
    return ModelConfig(
        hidden_layers=tuple(d["hidden_layers"]),
        activation=d["activation"],
        solver=d["solver"],
        alpha=d["alpha"],
        learning_rate=d["learning_rate"],
        learning_rate_init=d.get("learning_rate_init", 0.001),
        batch_size=d.get("batch_size", 64),
        max_epochs=d.get("max_epochs", 500),
        tol=d.get("tol", 1e-4),
        n_iter_no_change=d.get("n_iter_no_change", 10),
        momentum=d.get("momentum", 0.9),
        seed=d.get("seed", 0),
    )


def save_model(model: TrainedModel, path) -> None:
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "config": config_to_dict(model.config),
        "layers": [
            {"weights": w.tolist(), "biases": b.tolist()}
            for w, b in zip(model.network.weights, model.network.biases)
        ],
        "metadata": model.metadata,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)


def load_model(path) -> TrainedModel:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatVersionError(f"not a model file: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format_version") != MODEL_FORMAT_VERSION:
        raise FormatVersionError(
            f"unsupported model format_version {doc.get('format_version')!r}"
            if isinstance(doc, dict)
            else "not a model file"
        )
    config = config_from_dict(doc["config"])
    layers = doc["layers"]
    sizes = [len(layers[0]["weights"]), *(len(l["biases"]) for l in layers)]
    net = Network(sizes, config.activation, np.random.default_rng(0))
    for w, b, layer in zip(net.weights, net.biases, layers):
        w[:] = np.array(layer["weights"])
        b[:] = np.array(layer["biases"])
    return TrainedModel(config=config, network=net, metadata=doc.get("metadata", {}))
