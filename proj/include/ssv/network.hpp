#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ssv/rng.hpp"

namespace ssv {

enum class Activation : std::uint8_t { Tanh = 0, SiLU = 1 };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

/// Dense stack: affine layers with the activation after every layer except
/// the last. Parameters live in a flat vector, layer-major, each layer as
/// row-major W (out x in) followed by its bias.
struct LayerStack {
    int in_dim = 0;
    std::vector<int> hidden;
    int out_dim = 1;
    Activation act = Activation::Tanh;

    std::vector<int> dims() const;
    std::size_t param_count() const;
    void validate() const;
};

/// Plain coordinate MLP: z in R^m -> scalar.
struct MlpArch {
    int input_dim = 0;
    std::vector<int> hidden;
    Activation act = Activation::Tanh;

    LayerStack stack() const { return {input_dim, hidden, 1, act}; }
    void validate() const;
};

/// Factorized branch-trunk network:
///   out(s, z) = b + sum_k B_k(s) * T_k(z)
/// with B: R -> R^K on the time-like coordinate and T: R^m -> R^K.
/// Parameter layout: branch stack, trunk stack, then the scalar bias b.
struct FcnArch {
    int trunk_input_dim = 0;
    std::vector<int> branch_hidden;
    std::vector<int> trunk_hidden;
    int K = 0;
    Activation act = Activation::Tanh;

    LayerStack branch_stack() const { return {1, branch_hidden, K, act}; }
    LayerStack trunk_stack() const { return {trunk_input_dim, trunk_hidden, K, act}; }
    void validate() const;
};

using ArchDesc = std::variant<MlpArch, FcnArch>;

std::size_t param_count(const ArchDesc& arch);
int input_dim(const ArchDesc& arch);

/// Weights and biases in the documented flat layout, plus the architecture.
struct NetworkParams {
    ArchDesc arch;
    std::vector<double> theta;

    void validate() const;
};

/// Glorot-uniform weights (one uniform draw each, in layout order), zero
/// biases. Identical seed, identical parameters.
NetworkParams init_params(SeededRng& rng, const ArchDesc& arch);

double mlp_forward(const NetworkParams& params, std::span<const double> z);

/// FCN evaluation; s is the time-like branch input.
double fcn_forward(const NetworkParams& params, double s, std::span<const double> z);

/// Unified single-sample evaluation. For FCN inputs the trailing coordinate
/// (t or tau) doubles as the branch input.
double forward(const NetworkParams& params, std::span<const double> z);

/// One-line textual description of the architecture (layout, activation).
std::string describe(const ArchDesc& arch);

}  // namespace ssv
