"""Multi-layer perceptron for binary classification, trained by backprop.

The network maps 14 features through configurable hidden layers to a single
sigmoid unit. Loss is mean binary cross-entropy plus an L2 penalty on the
weights, 0.5 * alpha * sum(W^2) / batch_size, biases unpenalized. All
parameters live in one flat vector with per-layer views, so optimizer updates
are a handful of whole-vector numpy operations regardless of depth.

Solvers: minibatch sgd (momentum 0.9), adam, and "lbfgs", which here is
full-batch gradient descent with Armijo backtracking line search; any training
report naming lbfgs carries that note so grid results stay honest.
"""

from __future__ import annotations

import numpy as np

ACTIVATIONS = ("tanh", "relu")
SOLVERS = ("sgd", "adam", "lbfgs")
SCHEDULES = ("constant", "adaptive")

LBFGS_NOTE = "lbfgs solver is a hand-written limited-memory BFGS (two-loop recursion, history 10) with Armijo backtracking line search"

# adaptive schedule: halve the learning rate after this many stagnant epochs
ADAPTIVE_PATIENCE = 2


class DivergenceError(Exception):
    """Training loss or parameters became non-finite."""


class ShapeError(Exception):
    pass


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


class Network:
    """Feed-forward net with parameters stored flat.

    ``theta`` is the flat parameter vector; ``weights[i]`` / ``biases[i]`` are
    reshaped views into it, so writing through either side is seen by both.
    """

    def __init__(self, layer_sizes, activation: str, rng: np.random.Generator):
        if activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {activation!r}")
        if len(layer_sizes) < 2 or any(s < 1 for s in layer_sizes):
            raise ValueError(f"bad layer sizes {layer_sizes}")
        self.layer_sizes = tuple(int(s) for s in layer_sizes)
        self.activation = activation

        total = sum(
            nin * nout + nout
            for nin, nout in zip(self.layer_sizes, self.layer_sizes[1:])
        )
        self.theta = np.zeros(total)
        self.weights: list[np.ndarray] = []
        self.biases: list[np.ndarray] = []
        self._weight_mask = np.zeros(total)
        offset = 0
        for nin, nout in zip(self.layer_sizes, self.layer_sizes[1:]):
            w = self.theta[offset : offset + nin * nout].reshape(nin, nout)
            self._weight_mask[offset : offset + nin * nout] = 1.0
            offset += nin * nout
            b = self.theta[offset : offset + nout]
            offset += nout
            # glorot uniform, seeded for reproducibility
            bound = np.sqrt(6.0 / (nin + nout))
            w[:] = rng.uniform(-bound, bound, size=(nin, nout))
            self.weights.append(w)
            self.biases.append(b)

    def _act(self, z):
        return np.tanh(z) if self.activation == "tanh" else np.maximum(z, 0.0)

    def _act_deriv_from_output(self, a):
        if self.activation == "tanh":
            return 1.0 - a * a
        return (a > 0).astype(float)

    def forward_logits(self, X) -> np.ndarray:
        a = X
        for w, b in zip(self.weights[:-1], self.biases[:-1]):
            a = self._act(a @ w + b)
        return (a @ self.weights[-1] + self.biases[-1]).ravel()

    def predict_proba(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.layer_sizes[0]:
            raise ShapeError(
                f"expected (*, {self.layer_sizes[0]}) features, got {X.shape}"
            )
        return _sigmoid(self.forward_logits(X))

    def loss(self, X, y, alpha: float) -> float:
        z = self.forward_logits(X)
        data = np.mean(np.logaddexp(0.0, z) - y * z)
        wtheta = self.theta * self._weight_mask
        return float(data + 0.5 * alpha * (wtheta @ wtheta) / len(y))

    def loss_and_grad(self, X, y, alpha: float, grad_out=None):
        """Loss and its flat gradient over one batch of (X, y)."""
        n = len(y)
        grad = grad_out if grad_out is not None else np.empty_like(self.theta)

        # forward, keeping every layer's output for the backward pass
        acts = [X]
        a = X
        for w, b in zip(self.weights[:-1], self.biases[:-1]):
            a = self._act(a @ w + b)
            acts.append(a)
        z = (a @ self.weights[-1] + self.biases[-1]).ravel()

        loss = float(np.mean(np.logaddexp(0.0, z) - y * z))

        # backward: delta starts as dLoss/dlogits
        delta = ((_sigmoid(z) - y) / n)[:, None]
        offset = len(self.theta)
        for layer in range(len(self.weights) - 1, -1, -1):
            w, b = self.weights[layer], self.biases[layer]
            nin, nout = w.shape
            db = grad[offset - nout : offset]
            dw = grad[offset - nout - nin * nout : offset - nout].reshape(nin, nout)
            offset -= nout + nin * nout
            np.sum(delta, axis=0, out=db)
            np.matmul(acts[layer].T, delta, out=dw)
            if layer > 0:
                delta = (delta @ w.T) * self._act_deriv_from_output(acts[layer])

        # L2 penalty on weights only
        wtheta = self.theta * self._weight_mask
        loss += float(0.5 * alpha * (wtheta @ wtheta) / n)
        grad += (alpha / n) * wtheta
        return loss, grad


def _epoch_driver(config, epoch_losses_cb):
    """Shared convergence loop: run epochs until stall or the epoch cap.

    ``epoch_losses_cb`` runs one epoch and returns its loss. Returns
    (epochs_run, final_loss). Raises DivergenceError on non-finite loss.
    """
    best = np.inf
    stall = 0
    loss = np.inf
    epochs = 0
    for epoch in range(config.max_epochs):
        loss = epoch_losses_cb(epoch)
        epochs = epoch + 1
        if not np.isfinite(loss):
            raise DivergenceError(f"loss became non-finite at epoch {epochs}")
        if loss > best - config.tol:  # absolute gain under tol counts as a stall
            stall += 1
        else:
            stall = 0
        best = min(best, loss)
        if stall >= config.n_iter_no_change:
            break
    return epochs, float(loss)


def fit(X, y, config, rng: np.random.Generator) -> tuple[Network, dict]:
    """Train a network on (X, y) per the config; returns (net, metadata)."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or len(X) != len(y) or len(X) == 0:
        raise ShapeError(f"bad training set shapes X{X.shape}, y{y.shape}")
    if config.solver not in SOLVERS:
        raise ValueError(f"unknown solver {config.solver!r}")
    if config.learning_rate not in SCHEDULES:
        raise ValueError(f"unknown learning rate schedule {config.learning_rate!r}")

    sizes = [X.shape[1], *config.hidden_layers, 1]
    net = Network(sizes, config.activation, rng)

    # overflow during a diverging run is reported as DivergenceError; numpy's
    # own warnings would only duplicate that noisily
    with np.errstate(over="ignore", invalid="ignore"):
        if config.solver == "lbfgs":
            epochs, final_loss = _fit_lbfgs(net, X, y, config)
        else:
            epochs, final_loss = _fit_minibatch(net, X, y, config, rng)

    if not np.all(np.isfinite(net.theta)):
        raise DivergenceError("parameters became non-finite")

    proba = net.predict_proba(X)
    train_acc = float(np.mean((proba > 0.5) == (y > 0.5)))
    meta = {
        "epochs_run": epochs,
        "final_loss": final_loss,
        "train_accuracy": train_acc,
        "n_train_samples": len(y),
    }
    if config.solver == "lbfgs":
        meta["solver_note"] = LBFGS_NOTE
    return net, meta


def _fit_minibatch(net, X, y, config, rng):
    n = len(y)
    bs = min(config.batch_size, n)
    lr = config.learning_rate_init
    grad = np.empty_like(net.theta)
    t = 0

    if config.solver == "adam":
        m = np.zeros_like(net.theta)
        v = np.zeros_like(net.theta)
        b1, b2, eps = 0.9, 0.999, 1e-8
    else:
        velocity = np.zeros_like(net.theta)

    sched_stall = 0
    sched_best = np.inf

    def run_epoch(epoch):
        nonlocal lr, t, sched_stall, sched_best, m, v, velocity
        perm = rng.permutation(n)
        loss_sum = 0.0
        for start in range(0, n, bs):
            idx = perm[start : start + bs]
            loss, g = net.loss_and_grad(X[idx], y[idx], config.alpha, grad_out=grad)
            loss_sum += loss * len(idx)
            if config.solver == "adam":
                t += 1
                m *= b1
                m += (1 - b1) * g
                v *= b2
                v += (1 - b2) * (g * g)
                step = lr * np.sqrt(1 - b2**t) / (1 - b1**t)
                net.theta -= step * m / (np.sqrt(v) + eps)
            else:
                velocity *= config.momentum
                velocity -= lr * g
                net.theta += velocity
        epoch_loss = loss_sum / n
        if config.learning_rate == "adaptive":
            if epoch_loss > sched_best - config.tol:
                sched_stall += 1
            else:
                sched_stall = 0
            sched_best = min(sched_best, epoch_loss)
            if sched_stall >= ADAPTIVE_PATIENCE:
                lr *= 0.5
                sched_stall = 0
        return epoch_loss

    return _epoch_driver(config, run_epoch)


def _fit_lbfgs(net, X, y, config, history=10):
    """Full-batch L-BFGS: two-loop recursion over the last ``history``
    curvature pairs picks the direction, Armijo backtracking picks the step."""
    s_hist: list[np.ndarray] = []
    y_hist: list[np.ndarray] = []
    rho: list[float] = []
    grad = np.empty_like(net.theta)
    prev: list = [None, None]  # theta and gradient at the last evaluation

    def run_epoch(epoch):
        loss, g = net.loss_and_grad(X, y, config.alpha, grad_out=grad)
        g = g.copy()  # the grad buffer is reused; curvature pairs need stable arrays
        if prev[0] is not None:
            s = net.theta - prev[0]
            yk = g - prev[1]
            sy = float(s @ yk)
            if sy > 1e-10:  # keep the inverse-Hessian estimate positive definite
                s_hist.append(s)
                y_hist.append(yk)
                rho.append(1.0 / sy)
                if len(s_hist) > history:
                    s_hist.pop(0)
                    y_hist.pop(0)
                    rho.pop(0)

        q = g.copy()
        alphas = []
        for s, yk, r in zip(reversed(s_hist), reversed(y_hist), reversed(rho)):
            a = r * float(s @ q)
            alphas.append(a)
            q -= a * yk
        if s_hist:
            q *= float(s_hist[-1] @ y_hist[-1]) / float(y_hist[-1] @ y_hist[-1])
        for (s, yk, r), a in zip(zip(s_hist, y_hist, rho), reversed(alphas)):
            q += (a - r * float(yk @ q)) * s

        d = -q
        gd = float(g @ d)
        if gd >= 0.0:  # not a descent direction; fall back to steepest descent
            d = -g
            gd = -float(g @ g)
        if gd == 0.0:
            return loss

        theta0 = net.theta.copy()
        prev[0], prev[1] = theta0, g
        t = 1.0 if s_hist else min(1.0, 1.0 / max(float(np.abs(g).sum()), 1e-12))
        for _ in range(30):
            net.theta[:] = theta0 + t * d
            trial = net.loss(X, y, config.alpha)
            if trial <= loss + 1e-4 * t * gd:
                return trial
            t *= 0.5
        # no acceptable step: stay put and let the stall counter finish
        net.theta[:] = theta0
        return loss

    return _epoch_driver(config, run_epoch)
