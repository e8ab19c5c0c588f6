#ifndef EQOS_SALVETTI_HPP
#define EQOS_SALVETTI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eqos/sign_vector.hpp"

namespace eqos {

/// Face poset of a central arrangement (or abstract covector set),
/// ordered by reverse inclusion of closures: F <= G iff every zero of F
/// is a zero of G and the surviving nonzero signs agree.  Minimal
/// elements are the chambers; the all-zero vector, when present, is the
/// unique maximal element.
struct FacePoset {
  std::size_t n = 0;
  std::vector<SignVector> faces;

  static bool below(const SignVector& f, const SignVector& g);  // f <= g
  std::vector<SignVector> chamber_list() const;
};

/// Element (F, C): a face together with an adjacent chamber (C <= F).
struct SalvettiElement {
  SignVector face;
  SignVector chamber;

  bool operator==(const SalvettiElement&) const = default;
  std::string to_string() const;
};

/// The Salvetti poset: all (F, C) with the order (F', C') <= (F, C) iff
/// F' <= F in the face poset and C' = F' o C.
class SalvettiPoset {
 public:
  explicit SalvettiPoset(FacePoset faces);

  const FacePoset& face_poset() const { return faces_; }
  const std::vector<SalvettiElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t chamber_count() const { return chamber_count_; }

  bool below(std::size_t a, std::size_t b) const;  // elements()[a] <= elements()[b]

  /// The combinatorial complex-conjugation: (F, C) -> (F, C reflected
  /// over every hyperplane containing F).  Returns the permutation of
  /// element indices; an involution and an order-automorphism.
  std::vector<std::size_t> involution() const;

 private:
  FacePoset faces_;
  std::vector<SalvettiElement> elements_;
  std::size_t chamber_count_ = 0;
};

/// Build from a face/covector list.  Validates that the input contains a
/// chamber, is closed under negation, and composes chambers back into the
/// chamber set; failures name the offending composition.
SalvettiPoset build_salvetti(const std::vector<SignVector>& faces);

/// Chains of the Salvetti poset, stored per dimension as sorted tuples of
/// element indices; simplices[q] lists the q-simplices.
struct OrderComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::vector<std::int32_t>>> simplices;  // [dim][simplex][vertex]

  std::size_t simplex_count() const;
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
};

OrderComplex order_complex(const SalvettiPoset& sal);

/// Covector / tope text files: header "n count", then one sign string per
/// line over {+,-,0} (topes must not contain '0').
std::vector<SignVector> parse_sign_vector_file(std::istream& in, bool topes_only);
std::vector<SignVector> load_sign_vector_file(const std::string& path, bool topes_only);
std::string format_sign_vector_file(const std::vector<SignVector>& vectors);

}  // namespace eqos

#endif
