#pragma once

#include <span>
#include <vector>

#include "bfi/model.hpp"

namespace bfi {

/// Tie convention of the right/left operators and of the right/left
/// bipolar integrals built on them.
enum class Variant { neutral, right, left };

const char* to_string(Variant v);
Variant parse_variant(const std::string& name);

/// Symmetric maximum: the larger-magnitude operand, 0 on exact opposites.
double symmetric_max(double a, double b);

/// The unique element of strictly greatest absolute value among the
/// distinct values of xs, or 0 when an opposite pair ties at the top.
double bipolar_max(std::span<const double> xs);

/// As bipolar_max, but an opposite-pair tie resolves to the nonnegative
/// (right) or nonpositive (left) element.
double bipolar_max_right(std::span<const double> xs);
double bipolar_max_left(std::span<const double> xs);

double bipolar_max(std::span<const double> xs, Variant v);

/// Componentwise bipolar maximum of a family of equally sized vectors.
ScoreVector vector_bipolar_max(const std::vector<ScoreVector>& family, Variant v);

} // namespace bfi
