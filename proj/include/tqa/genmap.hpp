#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqa/nc.hpp"

namespace tqa {

struct UndefinedOnGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An (anti)homomorphism given by generator images. Images are stored for
// the non-diagonal atoms and for the diagonal base elements t_ii; powers
// t_ii^e are derived, which requires the diagonal images to be invertible
// monomials (true for every map in this project).
class GenMap {
 public:
  std::string name;
  AlgebraPtr source;
  AlgebraPtr target;
  bool anti = false;

  void set_image(const Gen& g, NCElement img);
  bool has_image(const Gen& g) const;
  // Image of an atom; diagonal atoms get their exponent applied.
  NCElement image_of(const Gen& g) const;

  const std::map<uint64_t, NCElement>& images() const { return images_; }

 private:
  std::map<uint64_t, NCElement> images_;
};

// Substitutes generator images (factors reversed first when m.anti) and
// normal-orders in the target algebra.
NCElement apply_genmap(const GenMap& m, const NCElement& e);

// Identity map of a spec.
GenMap identity_map(const AlgebraPtr& spec);

// f after g (apply g first). Works for any anti-flag combination.
GenMap compose(const GenMap& f, const GenMap& g);

// Applies maps right to left: eval_chain({f,g,h}, x) = f(g(h(x))).
NCElement eval_chain(const std::vector<const GenMap*>& maps, const NCElement& x);

// Inverse of a single-term element whose atoms are all diagonal.
NCElement invert_diag_monomial(const NCElement& e);

}  // namespace tqa
