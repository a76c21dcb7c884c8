#include "tqa/genmap.hpp"

#include <algorithm>

namespace tqa {

namespace {
uint64_t image_key(const Gen& g) {
  Gen base = g;
  if (base.is_diag()) base.e = 1;
  return gen_code(base);
}
}  // namespace

void GenMap::set_image(const Gen& g, NCElement img) {
  images_.insert_or_assign(image_key(g), std::move(img));
}

bool GenMap::has_image(const Gen& g) const { return images_.count(image_key(g)) != 0; }

NCElement GenMap::image_of(const Gen& g) const {
  auto it = images_.find(image_key(g));
  if (it == images_.end())
    throw UndefinedOnGenerator("map '" + name + "' undefined on " + g.to_string());
  if (!g.is_diag() || g.e == 1) return it->second;
  if (g.e > 1) return nc_pow(it->second, g.e);
  return nc_pow(invert_diag_monomial(it->second), -g.e);
}

NCElement invert_diag_monomial(const NCElement& e) {
  if (e.terms().size() != 1)
    throw std::logic_error("cannot invert non-monomial element " + e.to_string());
  const auto& [w, c] = *e.terms().begin();
  Word inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!it->is_diag())
      throw std::logic_error("cannot invert non-diagonal factor in " + e.to_string());
    inv.push_back(Gen::diag(it->i, -it->e));
  }
  return normal_form(NCElement::monomial(e.spec(), inv, c.pow(-1)));
}

NCElement apply_genmap(const GenMap& m, const NCElement& e) {
  NCElement out(m.target);
  for (const auto& [w, c] : e.terms()) {
    NCElement acc = NCElement::unit(m.target, c);
    if (m.anti) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) acc = nc_mul(acc, m.image_of(*it));
    } else {
      for (const Gen& g : w) acc = nc_mul(acc, m.image_of(g));
    }
    out += acc;
  }
  return out;
}

GenMap identity_map(const AlgebraPtr& spec) {
  GenMap m;
  m.name = "id";
  m.source = spec;
  m.target = spec;
  for (const Gen& g : spec->atoms) m.set_image(g, NCElement::generator(spec, g));
  return m;
}

GenMap compose(const GenMap& f, const GenMap& g) {
  GenMap r;
  r.name = f.name + "." + g.name;
  r.source = g.source;
  r.target = f.target;
  r.anti = f.anti != g.anti;
  for (const Gen& a : g.source->atoms) {
    Gen base = a;
    if (base.is_diag()) base.e = 1;
    r.set_image(base, apply_genmap(f, g.image_of(base)));
  }
  return r;
}

NCElement eval_chain(const std::vector<const GenMap*>& maps, const NCElement& x) {
  NCElement cur = x;
  for (auto it = maps.rbegin(); it != maps.rend(); ++it) cur = apply_genmap(**it, cur);
  return cur;
}

}  // namespace tqa
