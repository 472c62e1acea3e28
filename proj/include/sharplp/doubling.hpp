#pragma once

// Passing from exponent p to 2p: the scalar lemma psi_t, the direct proof at
// p = 4, and a link-by-link checker for the doubling step.

#include <string>
#include <vector>

#include "sharplp/measure.hpp"

namespace sharplp {

/// psi_t(a) = (1+a)^(1+t) - (1+a^2)^t - 2^t a, for a >= 0.
/// Nonnegative for t in [0, 1], nonpositive for t >= 1.
double psi(double t, double alpha);

/// (1+a)^(3/2) - sqrt(2) a - (1+a^2)^(1/2); nonnegative on [0, 1], zero at both ends.
double p4_scalar_gap(double alpha);

/// One inequality of a proof chain, lhs <= rhs unless reversed.
struct ChainLink {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool reversed = false;
  double slack = 0;
  bool holds = false;
};

ChainLink make_link(std::string name, double lhs, double rhs, bool reversed = false);

struct P4Report {
  double scale = 0;      // f, g multiplied by this so that ||f||_4^4 + ||g||_4^4 = 2
  double alpha = 0;      // ||fg||_2
  double beta = 0;       // ||f^2 + g^2||_2
  double lhs = 0;        // ||f+g||_4^2
  double bound_minkowski = 0;
  double bound_final = 0;  // 2^(1/2) (1+alpha)^(3/2)
  double identity_gap = 0; // beta^2 - 2 - 2 alpha^2
  double scalar_gap = 0;
  std::vector<ChainLink> links;
  bool identity_holds = false;
  bool all_hold = false;
};

P4Report direct_p4(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space);

struct DoublingReport {
  double p = 0;
  double scale = 0;  // normalises ||f||_{2p}^{2p} + ||g||_{2p}^{2p} to 2
  double gamma = 0;  // ||fg||_p after scaling
  double beta = 0;   // ||f^2 + g^2||_p after scaling
  double lhs = 0;    // ||f+g||_{2p}^2 after scaling
  double final_bound = 0;  // 2^(1/p) (1+gamma)^(2-1/p)
  std::vector<ChainLink> links;
  /// The links chain into lhs <= final_bound only when they all point the same way (p >= 2).
  bool composes = false;
  bool all_links_hold = false;
  /// lhs <= final_bound checked directly, i.e. the inequality at 2p (reverse form for p < 0).
  bool conclusion_holds = false;
};

/// p >= 2 or p < 0. Checks the Minkowski step, the level-p inequality on (f^2, g^2)
/// and the psi step, each in its own direction.
DoublingReport doubling_step(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space, double p);

}  // namespace sharplp
