#pragma once

#include <optional>
#include <vector>

#include "radspec/analysis.hpp"
#include "radspec/frobenius.hpp"
#include "radspec/io.hpp"
#include "radspec/oracle.hpp"
#include "radspec/ritz.hpp"

namespace radspec::records {

/// Roots in a (or b) with the truncation energy and c_0..c_n per root.
io::OutputRecord truncation(const std::vector<frobenius::TruncationSolution>& sols,
                            const frobenius::TruncationRoots& roots,
                            bool solved_for_a, int n, double gamma,
                            double fixed_value);

io::OutputRecord spectrum(const ritz::SpectrumResult& result, double target_tol,
                          const std::optional<oracle::FdSpectrum>& fd,
                          const std::optional<oracle::GridSpec>& grid);

io::OutputRecord curve_scan(const analysis::CurveScan& scan,
                            double target_tol);

/// Overlay points as their own table, one row per truncation pair.
io::OutputRecord overlay(const analysis::CurveScan& scan);

io::OutputRecord b_curves(const std::vector<analysis::BCurves>& curves);

io::OutputRecord profile(const analysis::Profile& profile, double target_tol);

}  // namespace radspec::records
