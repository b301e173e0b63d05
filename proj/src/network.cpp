#include "ssv/network.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nn_internal.hpp"

namespace ssv {

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::Tanh: return "tanh";
        case Activation::SiLU: return "silu";
    }
    return "?";
}

Activation activation_from_name(const std::string& name) {
    if (name == "tanh") return Activation::Tanh;
    if (name == "silu") return Activation::SiLU;
    throw std::invalid_argument("unknown activation: " + name);
}

std::vector<int> LayerStack::dims() const {
    std::vector<int> d;
    d.reserve(hidden.size() + 2);
    d.push_back(in_dim);
    for (int h : hidden) d.push_back(h);
    d.push_back(out_dim);
    return d;
}

std::size_t LayerStack::param_count() const {
    auto d = dims();
    std::size_t c = 0;
    for (std::size_t l = 0; l + 1 < d.size(); ++l)
        c += static_cast<std::size_t>(d[l + 1]) * d[l] + d[l + 1];
    return c;
}

void LayerStack::validate() const {
    if (in_dim < 1 || out_dim < 1) throw std::invalid_argument("layer stack: bad in/out dim");
    if (hidden.empty()) throw std::invalid_argument("layer stack: at least one hidden layer");
    for (int h : hidden)
        if (h < 1) throw std::invalid_argument("layer stack: widths must be >= 1");
}

void MlpArch::validate() const { stack().validate(); }

void FcnArch::validate() const {
    if (K < 1) throw std::invalid_argument("fcn: K must be >= 1");
    branch_stack().validate();
    trunk_stack().validate();
}

std::size_t param_count(const ArchDesc& arch) {
    if (const auto* m = std::get_if<MlpArch>(&arch)) return m->stack().param_count();
    const auto& f = std::get<FcnArch>(arch);
    return f.branch_stack().param_count() + f.trunk_stack().param_count() + 1;
}

int input_dim(const ArchDesc& arch) {
    if (const auto* m = std::get_if<MlpArch>(&arch)) return m->input_dim;
    return std::get<FcnArch>(arch).trunk_input_dim;
}

void NetworkParams::validate() const {
    std::visit([](const auto& a) { a.validate(); }, arch);
    if (theta.size() != param_count(arch))
        throw std::invalid_argument("network params: theta size does not match arch");
    for (double v : theta)
        if (!std::isfinite(v)) throw std::invalid_argument("network params: non-finite value");
}

namespace {

void init_stack(SeededRng& rng, const LayerStack& st, double* theta) {
    auto d = st.dims();
    std::size_t off = 0;
    for (std::size_t l = 0; l + 1 < d.size(); ++l) {
        std::size_t rows = d[l + 1], cols = d[l];
        double a = std::sqrt(6.0 / (rows + cols));
        for (std::size_t i = 0; i < rows * cols; ++i)
            theta[off + i] = a * (2.0 * rng.uniform01() - 1.0);
        off += rows * cols;
        for (std::size_t i = 0; i < rows; ++i) theta[off + i] = 0.0;
        off += rows;
    }
}

}  // namespace

NetworkParams init_params(SeededRng& rng, const ArchDesc& arch) {
    NetworkParams p;
    p.arch = arch;
    p.theta.resize(param_count(arch));
    if (const auto* m = std::get_if<MlpArch>(&arch)) {
        init_stack(rng, m->stack(), p.theta.data());
    } else {
        const auto& f = std::get<FcnArch>(arch);
        auto bs = f.branch_stack();
        init_stack(rng, bs, p.theta.data());
        init_stack(rng, f.trunk_stack(), p.theta.data() + bs.param_count());
        p.theta.back() = 0.0;
    }
    p.validate();
    return p;
}

double activate(Activation a, double x) {
    switch (a) {
        case Activation::Tanh: return std::tanh(x);
        case Activation::SiLU: return x / (1.0 + std::exp(-x));
    }
    return x;
}

double activate_grad(Activation a, double x) {
    switch (a) {
        case Activation::Tanh: {
            double t = std::tanh(x);
            return 1.0 - t * t;
        }
        case Activation::SiLU: {
            double s = 1.0 / (1.0 + std::exp(-x));
            return s * (1.0 + x * (1.0 - s));
        }
    }
    return 1.0;
}

void stack_forward(const double* theta, const LayerStack& st, const double* in, double* out,
                   std::vector<double>& scratch) {
    auto d = st.dims();
    std::size_t maxw = 0;
    for (int w : d) maxw = std::max<std::size_t>(maxw, w);
    scratch.resize(2 * maxw);
    double* cur = scratch.data();
    double* nxt = scratch.data() + maxw;
    for (int i = 0; i < d[0]; ++i) cur[i] = in[i];
    std::size_t off = 0;
    for (std::size_t l = 0; l + 1 < d.size(); ++l) {
        int rows = d[l + 1], cols = d[l];
        bool last = (l + 2 == d.size());
        const double* W = theta + off;
        const double* b = theta + off + static_cast<std::size_t>(rows) * cols;
        for (int r = 0; r < rows; ++r) {
            double s = b[r];
            const double* w = W + static_cast<std::size_t>(r) * cols;
            for (int c = 0; c < cols; ++c) s += w[c] * cur[c];
            nxt[r] = last ? s : activate(st.act, s);
        }
        off += static_cast<std::size_t>(rows) * cols + rows;
        std::swap(cur, nxt);
    }
    for (int i = 0; i < d.back(); ++i) out[i] = cur[i];
}

double mlp_forward(const NetworkParams& params, std::span<const double> z) {
    const auto& m = std::get<MlpArch>(params.arch);
    if (static_cast<int>(z.size()) != m.input_dim)
        throw std::invalid_argument("mlp_forward: input dimension mismatch");
    double out;
    std::vector<double> scratch;
    stack_forward(params.theta.data(), m.stack(), z.data(), &out, scratch);
    return out;
}

double fcn_forward(const NetworkParams& params, double s, std::span<const double> z) {
    const auto& f = std::get<FcnArch>(params.arch);
    if (static_cast<int>(z.size()) != f.trunk_input_dim)
        throw std::invalid_argument("fcn_forward: input dimension mismatch");
    auto bs = f.branch_stack();
    std::vector<double> scratch, B(f.K), T(f.K);
    stack_forward(params.theta.data(), bs, &s, B.data(), scratch);
    stack_forward(params.theta.data() + bs.param_count(), f.trunk_stack(), z.data(), T.data(),
                  scratch);
    double out = params.theta.back();
    for (int k = 0; k < f.K; ++k) out += B[k] * T[k];
    return out;
}

double forward(const NetworkParams& params, std::span<const double> z) {
    if (std::holds_alternative<MlpArch>(params.arch)) return mlp_forward(params, z);
    return fcn_forward(params, z[z.size() - 1], z);
}

std::string describe(const ArchDesc& arch) {
    std::ostringstream os;
    if (const auto* m = std::get_if<MlpArch>(&arch)) {
        os << "mlp(in=" << m->input_dim << ",hidden=";
        for (std::size_t i = 0; i < m->hidden.size(); ++i) os << (i ? "x" : "") << m->hidden[i];
        os << ",act=" << activation_name(m->act) << ")";
    } else {
        const auto& f = std::get<FcnArch>(arch);
        os << "fcn(trunk_in=" << f.trunk_input_dim << ",branch=";
        for (std::size_t i = 0; i < f.branch_hidden.size(); ++i)
            os << (i ? "x" : "") << f.branch_hidden[i];
        os << ",trunk=";
        for (std::size_t i = 0; i < f.trunk_hidden.size(); ++i)
            os << (i ? "x" : "") << f.trunk_hidden[i];
        os << ",K=" << f.K << ",act=" << activation_name(f.act) << ")";
    }
    return os.str();
}

}  // namespace ssv
