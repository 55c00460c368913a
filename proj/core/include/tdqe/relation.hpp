#pragma once

#include <string_view>

#include "tdqe/rational.hpp"

namespace tdqe {

enum class Relation { LT, GT, EQ, LE, GE };

// Relation obtained by multiplying both sides by -1.
Relation negated(Relation rel);
bool is_strict(Relation rel);
// Truth of `value rel 0`.
bool holds(Relation rel, const Rat& value);
std::string_view symbol(Relation rel);

enum class ConstVerdict { TriviallyTrue, TriviallyFalse };

}  // namespace tdqe
