#pragma once

#include <vector>

#include "illposed/function_rep.hpp"
#include "illposed/quadrature.hpp"

namespace illposed {

// f must live on the grid's domain (half-line grids accept [0, s_max]).
std::vector<double> sample(const FunctionRep& f, const QuadGrid& grid);

double inner_product(const FunctionRep& f, const FunctionRep& g, const QuadGrid& grid);
double l2_norm(const FunctionRep& f, const QuadGrid& grid);
double h1_seminorm(const FunctionRep& f, const QuadGrid& grid);

// ||x^p f^(k)|| with p in {0,1}, k in {0,1,2}
double weighted_norm(const FunctionRep& f, const QuadGrid& grid, int weight_power,
                     int derivative_order);

// ||x f''|| + ||x f'|| + ||x f|| + ||f||
double weighted_aggregate(const FunctionRep& f, const QuadGrid& grid);

bool same_support(const FunctionRep& f, const Domain& d);

}  // namespace illposed
