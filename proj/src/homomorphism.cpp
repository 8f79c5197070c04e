// Copyright 2026 The perfcodes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "perfcodes/homomorphism.hpp"

#include <string>
#include <unordered_map>

#include "perfcodes/errors.hpp"
#include "perfcodes/propelinear.hpp"

namespace perfcodes {

struct PermGroup::Index {
  std::unordered_map<Permutation, std::size_t, PermutationHash> map;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t max_order)
    : degree_(degree), generators_(std::move(generators)) {
  auto index = std::make_shared<Index>();
  for (const auto& g : generators_)
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  elements_.push_back(Permutation::identity(degree));
  index->map.emplace(elements_.front(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation h = elements_[i] * g;
      if (index->map.try_emplace(h, elements_.size()).second) {
        elements_.push_back(h);
        if (elements_.size() > max_order)
          throw CapacityError("group order exceeds " + std::to_string(max_order));
      }
    }
  }
  index_ = std::move(index);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_->map.find(p);
  if (it == index_->map.end()) return std::nullopt;
  return it->second;
}

TwoQuotient::TwoQuotient(PermGroup group) : group_(std::move(group)) {
  const auto& elems = group_.elements();
  const auto& gens = group_.generators();

  // N = <g^2 : g in G> together with generator commutators. N is normal and
  // G/N has exponent two.
  std::vector<Permutation> candidates;
  for (const auto& g : elems) candidates.push_back(g * g);
  for (const auto& a : gens)
    for (const auto& b : gens) candidates.push_back(a.inverse() * b.inverse() * a * b);
  std::vector<Permutation> n_gens;
  PermGroup normal(group_.degree(), {}, group_.order());
  for (const auto& c : candidates) {
    if (normal.contains(c)) continue;
    n_gens.push_back(c);
    normal = PermGroup(group_.degree(), n_gens, group_.order());
  }

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::size_t> coset(elems.size(), SIZE_MAX);
  std::vector<std::size_t> coset_rep;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coset[i] != SIZE_MAX) continue;
    const std::size_t id = coset_rep.size();
    coset_rep.push_back(i);
    for (const auto& k : normal.elements()) coset[*group_.index_of(elems[i] * k)] = id;
  }

  // Coordinates of cosets relative to the images of a subset of generators.
  std::vector<std::uint32_t> coset_coords(coset_rep.size(), kUnset);
  std::vector<std::size_t> span{coset[0]};
  coset_coords[coset[0]] = 0;
  for (const auto& g : gens) {
    const std::size_t gc = coset[*group_.index_of(g)];
    if (coset_coords[gc] != kUnset) continue;
    const std::uint32_t bit = std::uint32_t{1} << dimension_;
    ++dimension_;
    const std::size_t half = span.size();
    for (std::size_t s = 0; s < half; ++s) {
      const std::size_t product = coset[*group_.index_of(elems[coset_rep[span[s]]] * g)];
      coset_coords[product] = coset_coords[span[s]] | bit;
      span.push_back(product);
    }
  }
  if (span.size() != coset_rep.size()) throw Error("2-quotient basis does not span G/N");

  coords_.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) coords_[i] = coset_coords[coset[i]];
}

std::optional<std::uint32_t> TwoQuotient::coordinates(const Permutation& g) const {
  auto idx = group_.index_of(g);
  if (!idx) return std::nullopt;
  return coords_[*idx];
}

Hom2::Hom2(std::shared_ptr<const TwoQuotient> quotient, std::uint32_t functional)
    : quotient_(std::move(quotient)), functional_(functional) {
  for (const auto& g : quotient_->group().generators()) signs_.push_back((*this)(g));
}

int Hom2::operator()(const Permutation& g) const {
  auto c = quotient_->coordinates(g);
  if (!c) throw InvalidArgument("permutation outside the homomorphism's domain");
  return std::popcount(*c & functional_) & 1;
}

std::vector<Hom2> homs_to_z2(int degree, const std::vector<Permutation>& gens) {
  auto quotient = std::make_shared<const TwoQuotient>(PermGroup(degree, gens));
  std::vector<Hom2> homs;
  const std::uint32_t count = std::uint32_t{1} << quotient->dimension();
  homs.reserve(count);
  for (std::uint32_t f = 0; f < count; ++f) homs.emplace_back(quotient, f);
  return homs;
}

LambdaFn::LambdaFn(Code base, std::vector<std::uint8_t> table)
    : base_(std::move(base)), table_(std::move(table)) {
  if (table_.size() != base_.size()) throw InvalidArgument("lambda table size differs from code size");
  for (auto& v : table_)
    if (v > 1) throw InvalidArgument("lambda values must be 0 or 1");
}

LambdaFn LambdaFn::zero(const Code& base) {
  return LambdaFn(base, std::vector<std::uint8_t>(base.size(), 0));
}

int LambdaFn::operator()(Word y) const {
  auto idx = base_.index_of(y);
  if (!idx) throw InvalidArgument("lambda undefined outside its base code");
  return table_[*idx];
}

bool LambdaFn::is_zero() const {
  for (auto v : table_)
    if (v) return false;
  return true;
}

LambdaFn extend_hom(const PropelinearStructure& s, const Hom2& h) {
  const Code& code = s.code();
  std::vector<std::uint8_t> table;
  table.reserve(code.size());
  for (Word x : code.words()) {
    const Permutation px = s.perm_of(x);
    if (!h.defined_on(px))
      throw InvalidArgument("homomorphism undefined on the permutation of " +
                            format_word(x, code.length()));
    table.push_back(static_cast<std::uint8_t>(h(px)));
  }
  return LambdaFn(code, std::move(table));
}

std::vector<Hom2> structure_homs(const PropelinearStructure& s) {
  return homs_to_z2(s.length(), pi_group(s));
}

std::optional<std::pair<Word, Word>> find_hom_violation(const PropelinearStructure& s,
                                                        const LambdaFn& lambda) {
  const Code& code = s.code();
  if (!(code == lambda.base())) throw InvalidArgument("lambda is defined on a different code");
  const auto words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Permutation px = s.perm_of(words[i]);
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Word z = words[i] ^ px.apply(words[j]);
      const auto zi = code.index_of(z);
      if (!zi || lambda.at_index(*zi) != (lambda.at_index(i) ^ lambda.at_index(j)))
        return std::pair{words[i], words[j]};
    }
  }
  return std::nullopt;
}

}  // namespace perfcodes
