#include "ontobench/rdf.hpp"

namespace ontobench {

bool TripleStore::add(Triple t) {
  if (!seen_.insert(t).second) return false;
  std::size_t i = triples_.size();
  by_subject_[t.subject].push_back(i);
  by_predicate_[t.predicate.value].push_back(i);
  triples_.push_back(std::move(t));
  return true;
}

std::vector<const Triple*> TripleStore::with_subject(const Term& subject) const {
  std::vector<const Triple*> out;
  auto it = by_subject_.find(subject);
  if (it == by_subject_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&triples_[i]);
  return out;
}

std::vector<const Triple*> TripleStore::with_predicate(const std::string& predicate) const {
  std::vector<const Triple*> out;
  auto it = by_predicate_.find(predicate);
  if (it == by_predicate_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&triples_[i]);
  return out;
}

std::vector<Term> TripleStore::objects(const Term& subject,
                                       const std::string& predicate) const {
  std::vector<Term> out;
  for (const Triple* t : with_subject(subject)) {
    if (t->predicate.value == predicate) out.push_back(t->object);
  }
  return out;
}

}  // namespace ontobench
