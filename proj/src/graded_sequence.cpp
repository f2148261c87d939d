#include "koszul/graded_sequence.hpp"

#include <set>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void validate(const std::vector<Symbol>& entries) {
  if (entries.size() < 2) {
    throw DomainError("a graded sequence needs n >= 2 symbols, got " +
                      std::to_string(entries.size()));
  }
  std::set<std::string> seen;
  for (const auto& s : entries) {
    if (!seen.insert(s.label).second) {
      throw DomainError("duplicate symbol label '" + s.label + "'");
    }
  }
}

template <typename T>
std::vector<T> permute(const Permutation& sigma, const std::vector<T>& items) {
  if (sigma.size() != items.size()) {
    throw DimensionError("permutation of S_" + std::to_string(sigma.size()) +
                         " cannot act on a sequence of length " +
                         std::to_string(items.size()));
  }
  std::vector<T> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    out[sigma[i]] = items[i];
  }
  return out;
}

} // namespace

std::string default_label(std::size_t position) {
  return "f" + std::to_string(position);
}

GradedSequence::GradedSequence(const std::vector<Degree>& degrees) {
  entries_.reserve(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    entries_.push_back({default_label(i + 1), degrees[i]});
  }
  validate(entries_);
}

GradedSequence::GradedSequence(const std::vector<std::string>& labels,
                               const std::vector<Degree>& degrees) {
  if (labels.size() != degrees.size()) {
    throw DimensionError(std::to_string(labels.size()) + " labels for " +
                         std::to_string(degrees.size()) + " degrees");
  }
  entries_.reserve(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    entries_.push_back({labels[i], degrees[i]});
  }
  validate(entries_);
}

GradedSequence::GradedSequence(std::vector<Symbol> entries)
    : entries_(std::move(entries)) {
  validate(entries_);
}

std::vector<Degree> GradedSequence::degrees() const {
  std::vector<Degree> out;
  out.reserve(entries_.size());
  for (const auto& s : entries_) {
    out.push_back(s.degree);
  }
  return out;
}

std::vector<std::string> GradedSequence::labels() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& s : entries_) {
    out.push_back(s.label);
  }
  return out;
}

GradedSequence act(const Permutation& sigma, const GradedSequence& g) {
  return GradedSequence(permute(sigma, g.entries()));
}

std::vector<Degree> act(const Permutation& sigma, const std::vector<Degree>& degrees) {
  return permute(sigma, degrees);
}

} // namespace koszul
