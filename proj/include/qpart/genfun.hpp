#pragma once

#include "qpart/classes.hpp"
#include "qpart/series.hpp"

namespace qpart {

/* Closed product form (or sum of products, for the two-part case) of the
 * class generating function, truncated to the given order. Coefficient n
 * equals count(n, c). Throws UnsupportedClass for the V and W classes,
 * which are counted only by enumeration. */
TruncatedSeries class_genfun(const ClassSpec& c, long long order);

enum class OverKind { Modular, Congruent, Duplicate };

/* The two displayed product forms of each overpartition theorem. */
enum class ProductForm { First, Second };

TruncatedSeries over_genfun(OverKind kind, long long s, ProductForm form,
                            long long order);

} // namespace qpart
