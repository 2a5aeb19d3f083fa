#pragma once

#include "cvat/tensor.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cvat {

// Handle to a node on a Tape.
struct Var {
    int i = -1;
    bool valid() const { return i >= 0; }
};

// Reverse-mode autodiff tape. Ops append nodes in execution order; backward
// sweeps the nodes once in reverse, so the record is topologically sorted by
// construction. A node records a backward closure only if gradients can
// reach it (some input is a trainable leaf or derives from one); forwards
// over constants cost nothing extra. Single-owner during a forward/backward
// pass; not thread-safe.
template <typename T> class Tape {
public:
    using BackwardFn = std::function<void(Tape&, int self)>;

    Tape() = default;

    // Every op output is checked for NaN/Inf when enabled (default).
    void set_check_finite(bool on) { check_finite_ = on; }

    void reset() { nodes_.clear(); }
    int size() const { return static_cast<int>(nodes_.size()); }

    Var constant(Tensor<T> value) { return push("constant", std::move(value), false, {}); }

    // Trainable leaf; gradients accumulate here during backward.
    Var leaf(Tensor<T> value) { return push("leaf", std::move(value), true, {}); }

    const Tensor<T>& val(Var v) const { return node_at(v.i).value; }
    const Tensor<T>& val(int i) const { return node_at(i).value; }

    bool requires_grad(Var v) const { return node_at(v.i).requires_grad; }
    bool requires_grad(int i) const { return node_at(i).requires_grad; }

    // Gradient of a node after backward; zeros if the sweep never reached it.
    Tensor<T> grad(Var v) const {
        const Node& n = node_at(v.i);
        return n.has_grad ? n.grad : Tensor<T>::zeros(n.value.shape());
    }

    // Gradient of a visited node, by reference (backward internals).
    const Tensor<T>& grad_ref(int i) const { return node_at(i).grad; }

    // Accumulation buffer used by backward closures; allocated on first use.
    Tensor<T>& grad_buf(int i) {
        Node& n = nodes_[static_cast<size_t>(i)];
        if (!n.has_grad) {
            n.grad = Tensor<T>::zeros(n.value.shape());
            n.has_grad = true;
        }
        return n.grad;
    }

    // True if the backward sweep should spend work propagating into node i.
    bool wants(int i) const { return node_at(i).requires_grad; }

    // Reverse sweep from a scalar loss. May be called more than once per
    // tape (for separately accounted losses); gradients accumulate.
    void backward(Var loss) {
        if (val(loss).numel() != 1)
            throw ShapeError("backward: loss must be scalar, got " +
                             Tensor<T>::shape_string(val(loss).shape()));
        grad_buf(loss.i)[0] += T(1);
        for (int i = loss.i; i >= 0; --i) {
            Node& n = nodes_[static_cast<size_t>(i)];
            if (n.has_grad && n.backward) n.backward(*this, i);
        }
    }

    // Appends a node. `bwd` is dropped unless some input requires grad, so
    // subgraphs built purely from constants never run backward code.
    Var push(const char* op, Tensor<T> value, bool trainable, BackwardFn bwd,
             std::initializer_list<Var> inputs = {}) {
        if (check_finite_ && !value.all_finite())
            throw NonFiniteError(std::string("non-finite values produced by op '") + op + "'");
        Node n;
        n.op = op;
        n.value = std::move(value);
        n.requires_grad = trainable;
        if (!n.requires_grad) {
            for (const Var in : inputs)
                if (node_at(in.i).requires_grad) {
                    n.requires_grad = true;
                    break;
                }
        }
        if (n.requires_grad) n.backward = std::move(bwd);
        nodes_.push_back(std::move(n));
        return Var{static_cast<int>(nodes_.size()) - 1};
    }

private:
    struct Node {
        Tensor<T> value;
        Tensor<T> grad;
        const char* op = "";
        bool requires_grad = false;
        bool has_grad = false;
        BackwardFn backward;
    };

    const Node& node_at(int i) const {
        if (i < 0 || i >= size()) throw ShapeError("tape: invalid var handle");
        return nodes_[static_cast<size_t>(i)];
    }

    std::vector<Node> nodes_;
    bool check_finite_ = true;
};

namespace ops {

template <typename T>
inline void require_same_shape(const char* op, const Tensor<T>& a, const Tensor<T>& b) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": shape mismatch " +
                         Tensor<T>::shape_string(a.shape()) + " vs " +
                         Tensor<T>::shape_string(b.shape()));
}

// y = x W + b with x [R,I], W [I,O], b [O] broadcast over rows.
template <typename T> Var affine(Tape<T>& t, Var x, Var W, Var b) {
    const Tensor<T>& xv = t.val(x);
    const Tensor<T>& Wv = t.val(W);
    const Tensor<T>& bv = t.val(b);
    if (Wv.rank() != 2 || xv.cols() != Wv.dim(0) || bv.numel() != Wv.dim(1))
        throw ShapeError("affine: incompatible shapes " + Tensor<T>::shape_string(xv.shape()) +
                         " * " + Tensor<T>::shape_string(Wv.shape()) + " + " +
                         Tensor<T>::shape_string(bv.shape()));
    Tensor<T> y({static_cast<int>(xv.rows()), Wv.dim(1)});
    y.mat().noalias() = xv.mat() * Wv.mat();
    y.mat().rowwise() += ConstMatMap<T>(bv.data(), 1, bv.numel()).row(0);
    const int xi = x.i, Wi = W.i, bi = b.i;
    return t.push(
        "affine", std::move(y), false,
        [xi, Wi, bi](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            if (tp.wants(xi))
                tp.grad_buf(xi).mat().noalias() += g.mat() * tp.val(Wi).mat().transpose();
            if (tp.wants(Wi))
                tp.grad_buf(Wi).mat().noalias() += tp.val(xi).mat().transpose() * g.mat();
            if (tp.wants(bi)) {
                Tensor<T>& gb = tp.grad_buf(bi);
                MatMap<T>(gb.data(), 1, gb.numel()) += g.mat().colwise().sum();
            }
        },
        {x, W, b});
}

template <typename T> Var relu(Tape<T>& t, Var x) {
    Tensor<T> y = t.val(x);
    y.vec() = y.vec().max(T(0));
    const int xi = x.i;
    return t.push(
        "relu", std::move(y), false,
        [xi](Tape<T>& tp, int self) {
            if (!tp.wants(xi)) return;
            const Tensor<T>& g = tp.grad_ref(self);
            const Tensor<T>& y = tp.val(self);
            tp.grad_buf(xi).vec() += g.vec() * (y.vec() > T(0)).template cast<T>();
        },
        {x});
}

template <typename T> Var tanh_op(Tape<T>& t, Var x) {
    Tensor<T> y = t.val(x);
    y.vec() = y.vec().tanh();
    const int xi = x.i;
    return t.push(
        "tanh", std::move(y), false,
        [xi](Tape<T>& tp, int self) {
            if (!tp.wants(xi)) return;
            const Tensor<T>& g = tp.grad_ref(self);
            const Tensor<T>& y = tp.val(self);
            tp.grad_buf(xi).vec() += g.vec() * (T(1) - y.vec() * y.vec());
        },
        {x});
}

template <typename T> Var sigmoid(Tape<T>& t, Var x) {
    Tensor<T> y = t.val(x);
    y.vec() = T(1) / (T(1) + (-y.vec()).exp());
    const int xi = x.i;
    return t.push(
        "sigmoid", std::move(y), false,
        [xi](Tape<T>& tp, int self) {
            if (!tp.wants(xi)) return;
            const Tensor<T>& g = tp.grad_ref(self);
            const Tensor<T>& y = tp.val(self);
            tp.grad_buf(xi).vec() += g.vec() * y.vec() * (T(1) - y.vec());
        },
        {x});
}

template <typename T> Var add(Tape<T>& t, Var a, Var b) {
    require_same_shape("add", t.val(a), t.val(b));
    Tensor<T> y = t.val(a);
    y.vec() += t.val(b).vec();
    const int ai = a.i, bi = b.i;
    return t.push(
        "add", std::move(y), false,
        [ai, bi](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            if (tp.wants(ai)) tp.grad_buf(ai).vec() += g.vec();
            if (tp.wants(bi)) tp.grad_buf(bi).vec() += g.vec();
        },
        {a, b});
}

template <typename T> Var sub(Tape<T>& t, Var a, Var b) {
    require_same_shape("sub", t.val(a), t.val(b));
    Tensor<T> y = t.val(a);
    y.vec() -= t.val(b).vec();
    const int ai = a.i, bi = b.i;
    return t.push(
        "sub", std::move(y), false,
        [ai, bi](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            if (tp.wants(ai)) tp.grad_buf(ai).vec() += g.vec();
            if (tp.wants(bi)) tp.grad_buf(bi).vec() -= g.vec();
        },
        {a, b});
}

// Elementwise product; inputs may alias (x*x differentiates correctly).
template <typename T> Var mul(Tape<T>& t, Var a, Var b) {
    require_same_shape("mul", t.val(a), t.val(b));
    Tensor<T> y = t.val(a);
    y.vec() *= t.val(b).vec();
    const int ai = a.i, bi = b.i;
    return t.push(
        "mul", std::move(y), false,
        [ai, bi](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            if (tp.wants(ai)) tp.grad_buf(ai).vec() += g.vec() * tp.val(bi).vec();
            if (tp.wants(bi)) tp.grad_buf(bi).vec() += g.vec() * tp.val(ai).vec();
        },
        {a, b});
}

template <typename T> Var scale(Tape<T>& t, Var x, T c) {
    Tensor<T> y = t.val(x);
    y.vec() *= c;
    const int xi = x.i;
    return t.push(
        "scale", std::move(y), false,
        [xi, c](Tape<T>& tp, int self) {
            if (tp.wants(xi)) tp.grad_buf(xi).vec() += tp.grad_ref(self).vec() * c;
        },
        {x});
}

// Gated blend y = (1-z) .* h + z .* cand (the GRU state update).
template <typename T> Var lerp_gate(Tape<T>& t, Var h, Var cand, Var z) {
    require_same_shape("lerp_gate", t.val(h), t.val(cand));
    require_same_shape("lerp_gate", t.val(h), t.val(z));
    Tensor<T> y = t.val(h);
    y.vec() = (T(1) - t.val(z).vec()) * t.val(h).vec() + t.val(z).vec() * t.val(cand).vec();
    const int hi = h.i, ci = cand.i, zi = z.i;
    return t.push(
        "lerp_gate", std::move(y), false,
        [hi, ci, zi](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            const Tensor<T>& zv = tp.val(zi);
            if (tp.wants(hi)) tp.grad_buf(hi).vec() += g.vec() * (T(1) - zv.vec());
            if (tp.wants(ci)) tp.grad_buf(ci).vec() += g.vec() * zv.vec();
            if (tp.wants(zi))
                tp.grad_buf(zi).vec() += g.vec() * (tp.val(ci).vec() - tp.val(hi).vec());
        },
        {h, cand, z});
}

template <typename T> Var concat_cols(Tape<T>& t, Var a, Var b) {
    const Tensor<T>& av = t.val(a);
    const Tensor<T>& bv = t.val(b);
    if (av.rank() != 2 || bv.rank() != 2 || av.dim(0) != bv.dim(0))
        throw ShapeError("concat_cols: need matching row counts, got " +
                         Tensor<T>::shape_string(av.shape()) + " vs " +
                         Tensor<T>::shape_string(bv.shape()));
    const int rows = av.dim(0), ca = av.dim(1), cb = bv.dim(1);
    Tensor<T> y({rows, ca + cb});
    y.mat().leftCols(ca) = av.mat();
    y.mat().rightCols(cb) = bv.mat();
    const int ai = a.i, bi = b.i;
    return t.push(
        "concat_cols", std::move(y), false,
        [ai, bi, ca, cb](Tape<T>& tp, int self) {
            const Tensor<T>& g = tp.grad_ref(self);
            if (tp.wants(ai)) tp.grad_buf(ai).mat() += g.mat().leftCols(ca);
            if (tp.wants(bi)) tp.grad_buf(bi).mat() += g.mat().rightCols(cb);
        },
        {a, b});
}

template <typename T> Var slice_cols(Tape<T>& t, Var x, int start, int len) {
    const Tensor<T>& xv = t.val(x);
    if (xv.rank() != 2 || start < 0 || len <= 0 || start + len > xv.dim(1))
        throw ShapeError("slice_cols: bad slice [" + std::to_string(start) + "," +
                         std::to_string(start + len) + ") of " +
                         Tensor<T>::shape_string(xv.shape()));
    Tensor<T> y({xv.dim(0), len});
    y.mat() = xv.mat().middleCols(start, len);
    const int xi = x.i;
    return t.push(
        "slice_cols", std::move(y), false,
        [xi, start, len](Tape<T>& tp, int self) {
            if (tp.wants(xi))
                tp.grad_buf(xi).mat().middleCols(start, len) += tp.grad_ref(self).mat();
        },
        {x});
}

template <typename T> Var mean_all(Tape<T>& t, Var x) {
    const Tensor<T>& xv = t.val(x);
    Tensor<T> y = Tensor<T>::scalar(static_cast<T>(xv.vec().template cast<double>().mean()));
    const int xi = x.i;
    const T inv_n = T(1) / static_cast<T>(xv.numel());
    return t.push(
        "mean_all", std::move(y), false,
        [xi, inv_n](Tape<T>& tp, int self) {
            if (tp.wants(xi)) tp.grad_buf(xi).vec() += tp.grad_ref(self)[0] * inv_n;
        },
        {x});
}

// Mean squared error over all elements; both sides receive gradients.
template <typename T> Var mse(Tape<T>& t, Var a, Var b) {
    require_same_shape("mse", t.val(a), t.val(b));
    const Tensor<T>& av = t.val(a);
    const Tensor<T>& bv = t.val(b);
    const double m = (av.vec().template cast<double>() - bv.vec().template cast<double>())
                         .square()
                         .mean();
    Tensor<T> y = Tensor<T>::scalar(static_cast<T>(m));
    const int ai = a.i, bi = b.i;
    const T two_over_n = T(2) / static_cast<T>(av.numel());
    return t.push(
        "mse", std::move(y), false,
        [ai, bi, two_over_n](Tape<T>& tp, int self) {
            const T g = tp.grad_ref(self)[0] * two_over_n;
            const auto diff = tp.val(ai).vec() - tp.val(bi).vec();
            if (tp.wants(ai)) tp.grad_buf(ai).vec() += g * diff;
            if (tp.wants(bi)) tp.grad_buf(bi).vec() -= g * diff;
        },
        {a, b});
}

// y = sum_k w_k * x_k over scalar nodes (loss assembly).
template <typename T>
Var scalar_combine(Tape<T>& t, const std::vector<Var>& xs, const std::vector<T>& ws) {
    if (xs.empty() || xs.size() != ws.size())
        throw ShapeError("scalar_combine: needs equally many vars and weights");
    double acc = 0.0;
    for (size_t k = 0; k < xs.size(); ++k) {
        if (t.val(xs[k]).numel() != 1) throw ShapeError("scalar_combine: inputs must be scalars");
        acc += double(ws[k]) * double(t.val(xs[k])[0]);
    }
    std::vector<int> idx(xs.size());
    for (size_t k = 0; k < xs.size(); ++k) idx[k] = xs[k].i;
    bool any = false;
    for (const Var v : xs) any = any || t.requires_grad(v);
    Tape<T>* unused = nullptr;
    (void)unused;
    auto bwd = [idx, ws](Tape<T>& tp, int self) {
        const T g = tp.grad_ref(self)[0];
        for (size_t k = 0; k < idx.size(); ++k)
            if (tp.wants(idx[k])) tp.grad_buf(idx[k])[0] += ws[k] * g;
    };
    // push() only scans initializer_list inputs, so mark trainability here.
    return t.push("scalar_combine", Tensor<T>::scalar(static_cast<T>(acc)), any, std::move(bwd));
}

// 2D convolution, channels-last. x [B,H,W,C], weight [KH*KW*C, OC] with the
// patch dimension ordered (kh, kw, c), bias [OC]. No padding.
template <typename T> Var conv2d(Tape<T>& t, Var x, Var weight, Var bias, int kh, int kw, int stride) {
    const Tensor<T>& xv = t.val(x);
    const Tensor<T>& wv = t.val(weight);
    if (xv.rank() != 4)
        throw ShapeError("conv2d: input must be [B,H,W,C], got " +
                         Tensor<T>::shape_string(xv.shape()));
    const int B = xv.dim(0), H = xv.dim(1), W = xv.dim(2), C = xv.dim(3);
    if (wv.rank() != 2 || wv.dim(0) != kh * kw * C)
        throw ShapeError("conv2d: weight rows must equal kh*kw*C, got " +
                         Tensor<T>::shape_string(wv.shape()));
    const int OC = wv.dim(1);
    if (t.val(bias).numel() != OC) throw ShapeError("conv2d: bias size must equal out channels");
    if (H < kh || W < kw || stride <= 0) throw ShapeError("conv2d: kernel larger than input");
    const int OH = (H - kh) / stride + 1;
    const int OW = (W - kw) / stride + 1;

    Tensor<T> cols({B * OH * OW, kh * kw * C});
    {
        T* cp = cols.data();
        const T* xp = xv.data();
        for (int b = 0; b < B; ++b)
            for (int oh = 0; oh < OH; ++oh)
                for (int ow = 0; ow < OW; ++ow)
                    for (int r = 0; r < kh; ++r) {
                        const T* src =
                            xp + (((static_cast<std::int64_t>(b) * H + oh * stride + r) * W +
                                   ow * stride) *
                                  C);
                        std::copy(src, src + static_cast<std::int64_t>(kw) * C, cp);
                        cp += kw * C;
                    }
    }
    Tensor<T> y2({B * OH * OW, OC});
    y2.mat().noalias() = cols.mat() * wv.mat();
    y2.mat().rowwise() += ConstMatMap<T>(t.val(bias).data(), 1, OC).row(0);
    Tensor<T> y = y2.reshaped({B, OH, OW, OC});

    const int xi = x.i, wi = weight.i, bi = bias.i;
    auto cols_keep = std::make_shared<Tensor<T>>(std::move(cols));
    auto bwd = [xi, wi, bi, cols_keep, B, H, W, C, OH, OW, kh, kw, stride](Tape<T>& tp, int self) {
        const Tensor<T>& g4 = tp.grad_ref(self);
        const int OC = g4.dim(3);
        ConstMatMap<T> g2(g4.data(), static_cast<std::int64_t>(B) * OH * OW, OC);
        if (tp.wants(wi)) tp.grad_buf(wi).mat().noalias() += cols_keep->mat().transpose() * g2;
        if (tp.wants(bi)) {
            Tensor<T>& gb = tp.grad_buf(bi);
            MatMap<T>(gb.data(), 1, OC) += g2.colwise().sum();
        }
        if (tp.wants(xi)) {
            Tensor<T> gcols({B * OH * OW, kh * kw * C});
            gcols.mat().noalias() = g2 * tp.val(wi).mat().transpose();
            Tensor<T>& gx = tp.grad_buf(xi);
            const T* cp = gcols.data();
            T* xp = gx.data();
            for (int b = 0; b < B; ++b)
                for (int oh = 0; oh < OH; ++oh)
                    for (int ow = 0; ow < OW; ++ow)
                        for (int r = 0; r < kh; ++r) {
                            T* dst =
                                xp + (((static_cast<std::int64_t>(b) * H + oh * stride + r) * W +
                                       ow * stride) *
                                      C);
                            for (int k = 0; k < kw * C; ++k) dst[k] += cp[k];
                            cp += kw * C;
                        }
        }
    };
    return t.push("conv2d", std::move(y), false, std::move(bwd), {x, weight, bias});
}

// GroupNorm over channels-last activations x [B,H,W,C]; per-sample, per-group
// normalization over (H,W,C/G) followed by a per-channel affine.
template <typename T>
Var group_norm(Tape<T>& t, Var x, Var gamma, Var beta, int groups, T eps = T(1e-5)) {
    const Tensor<T>& xv = t.val(x);
    if (xv.rank() != 4)
        throw ShapeError("group_norm: input must be [B,H,W,C], got " +
                         Tensor<T>::shape_string(xv.shape()));
    const int B = xv.dim(0), H = xv.dim(1), W = xv.dim(2), C = xv.dim(3);
    if (groups <= 0 || C % groups != 0)
        throw ShapeError("group_norm: groups must divide channels (" + std::to_string(C) + ")");
    if (t.val(gamma).numel() != C || t.val(beta).numel() != C)
        throw ShapeError("group_norm: gamma/beta must have one entry per channel");
    const int cg = C / groups;
    const std::int64_t n_group = static_cast<std::int64_t>(H) * W * cg;

    Tensor<T> y(xv.shape());
    Tensor<T> mean({B, groups});
    Tensor<T> inv_std({B, groups});
    const T* xp = xv.data();
    T* yp = y.data();
    const T* gp = t.val(gamma).data();
    const T* bp = t.val(beta).data();
    for (int b = 0; b < B; ++b) {
        for (int g = 0; g < groups; ++g) {
            double sum = 0.0, sq = 0.0;
            for (int hw = 0; hw < H * W; ++hw) {
                const T* px = xp + (static_cast<std::int64_t>(b) * H * W + hw) * C + g * cg;
                for (int c = 0; c < cg; ++c) {
                    const double v = double(px[c]);
                    sum += v;
                    sq += v * v;
                }
            }
            const double mu = sum / double(n_group);
            const double var = std::max(0.0, sq / double(n_group) - mu * mu);
            const double is = 1.0 / std::sqrt(var + double(eps));
            mean.data()[b * groups + g] = static_cast<T>(mu);
            inv_std.data()[b * groups + g] = static_cast<T>(is);
            for (int hw = 0; hw < H * W; ++hw) {
                const std::int64_t base = (static_cast<std::int64_t>(b) * H * W + hw) * C + g * cg;
                for (int c = 0; c < cg; ++c) {
                    const T xhat = static_cast<T>((double(xp[base + c]) - mu) * is);
                    yp[base + c] = gp[g * cg + c] * xhat + bp[g * cg + c];
                }
            }
        }
    }

    const int xi = x.i, gi = gamma.i, bi = beta.i;
    auto mean_keep = std::make_shared<Tensor<T>>(std::move(mean));
    auto is_keep = std::make_shared<Tensor<T>>(std::move(inv_std));
    auto bwd = [xi, gi, bi, mean_keep, is_keep, B, H, W, C, groups, cg,
                n_group](Tape<T>& tp, int self) {
        const Tensor<T>& gy = tp.grad_ref(self);
        const Tensor<T>& xv = tp.val(xi);
        const T* xp = xv.data();
        const T* gyp = gy.data();
        const T* gp = tp.val(gi).data();
        const bool want_x = tp.wants(xi), want_gamma = tp.wants(gi), want_beta = tp.wants(bi);
        T* ggamma = want_gamma ? tp.grad_buf(gi).data() : nullptr;
        T* gbeta = want_beta ? tp.grad_buf(bi).data() : nullptr;
        T* gx = want_x ? tp.grad_buf(xi).data() : nullptr;
        for (int b = 0; b < B; ++b) {
            for (int g = 0; g < groups; ++g) {
                const double mu = double(mean_keep->data()[b * groups + g]);
                const double is = double(is_keep->data()[b * groups + g]);
                double m1 = 0.0, m2 = 0.0; // mean(dxhat), mean(dxhat*xhat)
                for (int hw = 0; hw < H * W; ++hw) {
                    const std::int64_t base =
                        (static_cast<std::int64_t>(b) * H * W + hw) * C + g * cg;
                    for (int c = 0; c < cg; ++c) {
                        const double xhat = (double(xp[base + c]) - mu) * is;
                        const double dy = double(gyp[base + c]);
                        const double dxhat = dy * double(gp[g * cg + c]);
                        m1 += dxhat;
                        m2 += dxhat * xhat;
                        if (want_gamma) ggamma[g * cg + c] += static_cast<T>(dy * xhat);
                        if (want_beta) gbeta[g * cg + c] += static_cast<T>(dy);
                    }
                }
                if (!want_x) continue;
                m1 /= double(n_group);
                m2 /= double(n_group);
                for (int hw = 0; hw < H * W; ++hw) {
                    const std::int64_t base =
                        (static_cast<std::int64_t>(b) * H * W + hw) * C + g * cg;
                    for (int c = 0; c < cg; ++c) {
                        const double xhat = (double(xp[base + c]) - mu) * is;
                        const double dxhat = double(gyp[base + c]) * double(gp[g * cg + c]);
                        gx[base + c] += static_cast<T>(is * (dxhat - m1 - xhat * m2));
                    }
                }
            }
        }
    };
    return t.push("group_norm", std::move(y), false, std::move(bwd), {x, gamma, beta});
}

} // namespace ops

} // namespace cvat
