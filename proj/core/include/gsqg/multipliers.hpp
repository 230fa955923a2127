#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "gsqg/field.hpp"

namespace gsqg {

/// A Fourier multiplier. The symbol is evaluated at every nonzero grid
/// wavevector; the zero mode uses zero_mode when set, otherwise symbol(0, 0).
/// A symbol that blows up at the origin must set zero_mode.
struct MultiplierSpec {
  using Symbol = std::function<std::array<cplx, 2>(double xi1, double xi2)>;

  std::string name;
  std::size_t components = 1;  // 1: scalar output, 2: vector output
  Symbol symbol;
  std::optional<std::array<cplx, 2>> zero_mode;
  bool singular_at_origin = false;

  /// Scalar symbol wrapper.
  static MultiplierSpec scalar(std::string name, std::function<cplx(double, double)> symbol,
                               std::optional<cplx> zero_mode = std::nullopt, bool singular = false);
};

MultiplierSpec frac_laplacian(double s);
MultiplierSpec bessel(double s);
MultiplierSpec grad_perp();
MultiplierSpec biot_savart(double beta);

/// "frac_laplacian:s", "bessel:s", "biot_savart:beta", "grad_perp".
MultiplierSpec parse_multiplier(const std::string& text);

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m);
VectorField apply_vector_multiplier(const ScalarField& f, const MultiplierSpec& m);

/// d^{a1}/dx1^{a1} d^{a2}/dx2^{a2} f, spectrally.
ScalarField derivative(const ScalarField& f, int a1, int a2);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);

/// u = grad_perp (-Delta)^{-1+beta/2} theta, mean of theta dropped. beta in (0, 1).
VectorField biot_savart_velocity(const ScalarField& theta, double beta);

/// dealias(dealias(f) * dealias(g)).
ScalarField dealiased_product(const ScalarField& f, const ScalarField& g);

/// J^s(fg) - f J^s g with dealiased products. s > 0.
ScalarField kato_ponce_commutator(const ScalarField& f, const ScalarField& g, double s);

}  // namespace gsqg
