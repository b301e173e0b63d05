#pragma once

#include <vector>

#include "ssv/network.hpp"

namespace ssv {

double activate(Activation a, double x);
double activate_grad(Activation a, double x);

/// Single-sample stack evaluation; scratch is reused across calls.
void stack_forward(const double* theta, const LayerStack& st, const double* in, double* out,
                   std::vector<double>& scratch);

/// Per-stack workspace for forward+backward over one sample: pre-activations
/// and activations per layer, plus delta buffers.
struct StackTape {
    std::vector<int> dims;
    std::vector<std::vector<double>> pre;   // pre-activation per layer 1..N
    std::vector<std::vector<double>> act;   // activation per layer 0..N (0 = input)
    std::vector<double> delta, delta_next;

    void reset(const LayerStack& st);
};

/// Forward pass recording the tape; returns outputs in tape.act.back().
void stack_forward_tape(const double* theta, const LayerStack& st, const double* in,
                        StackTape& tape);

/// Reverse pass: out_cotangent has st.out_dim entries; accumulates dL/dtheta
/// into grad (same layout as theta) and optionally dL/dinput into d_input.
void stack_backward_tape(const double* theta, const LayerStack& st, const double* out_cotangent,
                         const StackTape& tape, double* grad, double* d_input);

}  // namespace ssv
