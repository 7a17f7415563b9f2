#pragma once

#include "phaseprob/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace phaseprob {

// Where the index in a Classified outcome came from.
enum class IndexSource
{
  symbolic,            // closed-form criteria
  forced_by_no_lines,  // l = 0: the field is never radial, so the index is 1
  winding_oracle,      // fallback after NotWellPosed
};

std::string_view to_string(IndexSource source);

struct Classified
{
  Portrait label;
  int index = 0;
  int lines = 0;
  bool tiebreak_used = false;
  IndexSource index_source = IndexSource::symbolic;
  bool vertical_line = false;   // x = 0 counted as an invariant line
};

struct Degenerate
{
  std::vector<std::string> reasons;
};

// (index, lines) pair outside the portrait table. Should only come from
// in-band borderline samples or a formula bug.
struct UnrealizedPair
{
  int index = 0;
  int lines = 0;
};

using ClassificationOutcome = std::variant<Classified, Degenerate, UnrealizedPair>;

struct PortraitEntry
{
  int index;
  int lines;
  std::vector<Portrait> labels;   // two labels only for the cubic (1, 4) pair
};

// The (index, lines) -> label map of one degree (1, 2 or 3).
std::vector<PortraitEntry> portrait_table(int degree);

std::optional<PortraitEntry> lookup_portrait(int degree, int index, int lines);

struct ClassifyOptions
{
  // Count x = 0 as an invariant line (interactive use). Monte Carlo runs
  // treat it as degenerate.
  bool allow_vertical_line = true;
  // Use the winding oracle when the closed-form index is not well-posed.
  bool oracle_fallback = false;
};

ClassificationOutcome classify(const VectorField& f, ClassifyOptions options = {});

// Linear field (Ax+By, Cx+Dy) from determinant, trace and discriminant.
ClassificationOutcome classify_linear(double A, double B, double C, double D);

class BandHitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class Stability { attractor, repeller, neither };

std::string_view to_string(Stability s);

// Global attractor/repeller test for odd degree. With invariant lines the
// origin attracts iff the radial speed P(1,k) is negative on every invariant
// direction (Q(0,1) for x = 0); with none, iff the log-radius gain over one
// revolution, the integral of R/|Theta|, is negative. Throws BandHitError
// when a deciding quantity is in band, std::invalid_argument for even degree.
Stability global_stability(const VectorField& f);

bool is_global_attractor(const VectorField& f);
bool is_global_repeller(const VectorField& f);

} // namespace phaseprob
