/**
 * @file  models.hpp
 * @brief Factory functions for the built-in logarithmic vertex algebras:
 *        symplectic fermions, logarithmic free bosons with an arbitrary Gram
 *        matrix, the logarithmic lattice algebra, the Gurarie-Ludwig algebra,
 *        and tensor products.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logva/model.hpp"

namespace logva {

/// Symplectic fermions: odd generators xi, chi with xi(z1)chi(z2) ~ log(z12).
Model symplectic_fermions();

/// Logarithmic free bosons for a nondegenerate symmetric Gram matrix.
Model free_boson(const std::vector<std::vector<Rat>>& gram);

/// Logarithmic lattice algebra for a positive-definite integral Gram matrix.
Model lattice_logva(const std::vector<std::vector<Int>>& gram);

/// Gurarie-Ludwig algebra; beta stays formal unless pinned to a rational.
Model gurarie_ludwig(const std::optional<Rat>& beta = std::nullopt);

/// Tensor product of two models.
Model tensor_product(const Model& m1, const Model& m2);

/// Parse a model spec string: "sf", "fb:<rank>", "lat:<gram>",
/// "gl[:beta=p/q]", "tensor(<spec>,<spec>)".
Model parse_model(const std::string& spec);

}  // namespace logva
