#include "radspec/records.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "radspec/format.hpp"

namespace radspec::records {
namespace {

void add_params(io::OutputRecord& rec, const ModelParams& p) {
  rec.add_metadata("gamma", p.gamma);
  rec.add_metadata("a", p.a);
  rec.add_metadata("b", p.b);
}

void add_version(io::OutputRecord& rec) {
  rec.add_metadata("tool_version", io::kToolVersion);
}

}  // namespace

io::OutputRecord truncation(
    const std::vector<frobenius::TruncationSolution>& sols,
    const frobenius::TruncationRoots& roots, bool solved_for_a, int n,
    double gamma, double fixed_value) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::TruncationRoots;
  rec.add_metadata("n", static_cast<double>(n));
  rec.add_metadata("gamma", gamma);
  rec.add_metadata(solved_for_a ? "b" : "a", fixed_value);
  rec.add_metadata("solve_for", solved_for_a ? "a" : "b");
  rec.add_metadata("complex_roots_excluded",
                   static_cast<double>(roots.complex_excluded));
  rec.add_metadata("root_residual_tol", 1e-12);
  add_version(rec);
  rec.columns = {"root_index", solved_for_a ? "a" : "b", "W", "multiplicity"};
  for (int j = 0; j <= n; ++j) {
    rec.columns.push_back("c" + std::to_string(j));
  }
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    std::vector<io::Cell> row{static_cast<double>(s.root_index),
                              solved_for_a ? s.params.a : s.params.b, s.energy,
                              static_cast<double>(roots.multiplicity[i])};
    for (double c : s.coeffs) {
      row.emplace_back(c);
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

io::OutputRecord spectrum(const ritz::SpectrumResult& result, double target_tol,
                          const std::optional<oracle::FdSpectrum>& fd,
                          const std::optional<oracle::GridSpec>& grid) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::Table;
  add_params(rec, result.params);
  rec.add_metadata("basis_size", static_cast<double>(result.basis_size));
  rec.add_metadata("target_tol", target_tol);
  rec.add_metadata("converged", result.converged ? "true" : "false");
  rec.add_metadata("degeneracy_gap", ritz::kDegeneracyGap);
  if (grid) {
    rec.add_metadata("oracle_xi_max", grid->xi_max);
    rec.add_metadata("oracle_points", static_cast<double>(grid->num_points));
  }
  add_version(rec);
  rec.columns = {"nu", "W", "convergence", "residual", "degenerate"};
  if (fd) {
    rec.columns.insert(rec.columns.end(),
                       {"W_fd", "fd_deviation", "box_contaminated"});
  }
  for (std::size_t nu = 0; nu < result.eigenvalues.size(); ++nu) {
    std::vector<io::Cell> row{static_cast<double>(nu), result.eigenvalues[nu],
                              result.convergence[nu], result.residuals[nu],
                              std::string(result.degenerate[nu] ? "yes" : "no")};
    if (fd) {
      row.emplace_back(fd->eigenvalues[nu]);
      row.emplace_back(std::abs(fd->eigenvalues[nu] - result.eigenvalues[nu]));
      row.emplace_back(std::string(fd->box_contaminated[nu] ? "yes" : "no"));
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

io::OutputRecord curve_scan(const analysis::CurveScan& scan,
                            double target_tol) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::CurveScan;
  rec.add_metadata("gamma", scan.gamma);
  rec.add_metadata("b", scan.b);
  rec.add_metadata("a_min", scan.a_values.front());
  rec.add_metadata("a_max", scan.a_values.back());
  rec.add_metadata("points", static_cast<double>(scan.a_values.size()));
  rec.add_metadata("target_tol", target_tol);
  rec.add_metadata("failed_points", static_cast<double>(scan.failures.size()));
  add_version(rec);
  rec.columns = {"a"};
  for (std::size_t nu = 0; nu < scan.branches.size(); ++nu) {
    rec.columns.push_back("W" + std::to_string(nu));
  }
  for (std::size_t k = 0; k < scan.a_values.size(); ++k) {
    std::vector<io::Cell> row{scan.a_values[k]};
    for (const auto& branch : scan.branches) {
      row.emplace_back(branch[k]);
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

io::OutputRecord overlay(const analysis::CurveScan& scan) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::CurveScan;
  rec.add_metadata("gamma", scan.gamma);
  rec.add_metadata("b", scan.b);
  rec.add_metadata("content", "truncation_overlay");
  add_version(rec);
  rec.columns = {"n", "root_index", "a", "W_truncation", "nu", "W_branch",
                 "deviation", "on_branch"};
  for (const auto& p : scan.truncation_points) {
    rec.rows.push_back({static_cast<double>(p.n),
                        static_cast<double>(p.root_index), p.a, p.energy,
                        static_cast<double>(p.nu), p.branch_energy,
                        p.deviation, std::string(p.on_branch ? "yes" : "no")});
  }
  return rec;
}

io::OutputRecord b_curves(const std::vector<analysis::BCurves>& curves) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::CurveScan;
  rec.add_metadata("content", "b_curves");
  if (!curves.empty()) {
    rec.add_metadata("n", static_cast<double>(curves.front().n));
  }
  add_version(rec);
  std::size_t width = 0;
  for (const auto& c : curves) {
    for (const auto& roots : c.roots) {
      width = std::max(width, roots.size());
    }
  }
  rec.columns = {"gamma", "a"};
  for (std::size_t i = 0; i < width; ++i) {
    rec.columns.push_back("b" + std::to_string(i + 1));
  }
  for (const auto& c : curves) {
    for (std::size_t k = 0; k < c.a_values.size(); ++k) {
      std::vector<io::Cell> row{c.gamma, c.a_values[k]};
      for (std::size_t i = 0; i < width; ++i) {
        row.emplace_back(i < c.roots[k].size()
                             ? c.roots[k][i]
                             : std::numeric_limits<double>::quiet_NaN());
      }
      rec.rows.push_back(std::move(row));
    }
  }
  return rec;
}

io::OutputRecord profile(const analysis::Profile& profile, double target_tol) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::Profile;
  add_params(rec, profile.params);
  rec.add_metadata("target_tol", target_tol);
  for (std::size_t i = 0; i < profile.nus.size(); ++i) {
    rec.add_metadata("nodes_nu" + std::to_string(profile.nus[i]),
                     static_cast<double>(profile.nodes[i]));
  }
  add_version(rec);
  rec.columns = {"xi"};
  for (int nu : profile.nus) {
    rec.columns.push_back("xiR2_nu" + std::to_string(nu));
  }
  for (std::size_t k = 0; k < profile.xi.size(); ++k) {
    std::vector<io::Cell> row{profile.xi[k]};
    for (const auto& v : profile.values) {
      row.emplace_back(v[k]);
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

}  // namespace radspec::records
