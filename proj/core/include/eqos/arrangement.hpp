#ifndef EQOS_ARRANGEMENT_HPP
#define EQOS_ARRANGEMENT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqos/linsystem.hpp"
#include "eqos/qmatrix.hpp"
#include "eqos/rational.hpp"
#include "eqos/sign_vector.hpp"

namespace eqos {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cooriented affine form w(p) = a . p + b.  The positive side of the
/// hyperplane w = 0 is the open half-space {w > 0}.
struct AffineForm {
  QVector normal;    // a, length = ambient dimension, never all zero
  Rational offset;   // b
};

/// A cooriented real arrangement of n affine hyperplanes in dimension d,
/// with exact rational coefficients.  Hyperplane indices are 1-based and
/// follow input order.  Repeated hyperplanes (proportional forms) are
/// rejected unless allow_repeats is set.
class Arrangement {
 public:
  Arrangement(std::size_t dim, std::vector<AffineForm> forms, bool allow_repeats = false);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }  // n
  const AffineForm& form(int i) const { return forms_.at(i - 1); }
  const std::vector<AffineForm>& forms() const { return forms_; }

  /// Rank of the matrix of normal vectors; equals the top degree of the
  /// Orlik-Solomon algebra.
  std::size_t rank() const;

  bool is_central() const;  // all offsets zero
  bool is_essential() const { return rank() == dim_; }

  /// Arrangement with the coorientation of hyperplane i reversed
  /// (form negated; same hyperplanes).
  Arrangement with_flipped(int i) const;

  /// Arrangement re-cooriented by `flips` (flips[i-1] true = negate form i).
  Arrangement with_coorientation(const std::vector<bool>& flips) const;

 private:
  std::size_t dim_;
  std::vector<AffineForm> forms_;
};

/// Parse the text format: header "d n", then n lines of d+1 rationals
/// "a_1 ... a_d b" meaning w = a.p + b with positive side {w > 0}.
/// '#' starts a comment.  Errors name the offending line.
Arrangement parse_arrangement(std::istream& in, bool allow_repeats = false);
Arrangement parse_arrangement(const std::string& text, bool allow_repeats = false);
Arrangement load_arrangement(const std::string& path, bool allow_repeats = false);

std::string format_arrangement(const Arrangement& a);

/// Homogenize into a central arrangement one dimension up: each form
/// becomes a.p + b z, and the cone over the hyperplane at infinity (the
/// form z) is appended as index n+1.
Arrangement cone(const Arrangement& a);

/// True iff the affine flat {w_i = 0 : i in s} is empty (exact rank test).
/// s = {} gives false.
bool intersection_empty(const Arrangement& a, const std::vector<int>& s);

/// True iff the (nonempty) flat of s has codimension < |s|, i.e. the
/// normals of s are dependent.  Throws std::invalid_argument when the
/// intersection is empty.
bool excess_codim(const Arrangement& a, const std::vector<int>& s);

/// True iff the open region (over i in plus: w_i > 0) cap (over j in
/// minus: w_j < 0) is empty, decided by certificate-producing
/// Fourier-Motzkin.
bool sign_region_empty(const Arrangement& a, const SignPair& sp);

/// The strict/equality system whose solutions realize sign vector sigma
/// on the first sigma.size() hyperplanes.
LinSystem face_system(const Arrangement& a, const SignVector& sigma);

/// All realizable sign vectors, by depth-first extension with branch
/// order (+, -, 0) and feasibility pruning.  Output order is the DFS
/// order, which is reproducible.
std::vector<SignVector> enumerate_faces(const Arrangement& a);

/// Faces with no zero entries: the chambers of the real complement.
std::vector<SignVector> chambers(const Arrangement& a);

}  // namespace eqos

#endif
