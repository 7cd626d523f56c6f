// turan.hpp — closed-form extremal edge counts, applicability thresholds, and
// the predicted extremal / spectral-extremal families for star-path forests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spextral/containment.hpp"
#include "spextral/families.hpp"

namespace spextral {

class UnsupportedPatternError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

struct TuranValue {
  long long value = 0;
  std::string case_tag;
  bool guaranteed = false;  // n meets the statement's hypothesis
  long long threshold = 0;  // minimal n the statement requires
};

struct Prediction {
  std::vector<ExtremalFamily> families;
  unsigned long long threshold = 0;  // saturates at 2^64-1 when astronomical
  std::string source;
  bool guaranteed = false;
  std::string note;  // nonempty when the as-printed statement needs a caveat
  bool printed_statement_inconsistent = false;
};

// Max edges of a connected graph of order n with no path of order k+1 (n > k >= 3).
long long turan_connected_path_bound(int n, int k);

// Upper bound for graphs with no star of l leaves (l >= 3, n >= l+1).
long long turan_star_bound(int n, int l);

// Exact extremal edge count for k disjoint stars of l leaves (k >= 2, l >= 3);
// a four-branch piecewise formula over contiguous n ranges.
TuranValue turan_star_forest(int n, int k, int l);

// Exact extremal edge count and predicted extremal families for k stars of
// l-1 leaves plus a path of order l (k >= 1, l >= 4, n >= k).
std::pair<TuranValue, Prediction> turan_star_path(int n, int k, int l);

// Coarser bound (k + floor(l/2) - 1/2)(n - 1); may be half-integral, and the
// returned double represents that value exactly.
double upbound_star_path(int n, int k, int l);

// max{2^{4p}, m^2}; throws when the value exceeds the 64-bit range.
unsigned long long spectral_transfer_threshold(int p, unsigned long long m);

// Maps a recognized pattern shape to the family/families predicted to
// maximize spectral radius, with that statement's n-threshold.
Prediction predicted_spectral_extremal(const ForestPattern& f, int n);

}  // namespace spextral
