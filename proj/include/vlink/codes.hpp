#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlink {

enum class Passage : std::uint8_t { Over, Under };

/// One passage of a link component through a crossing.
struct Symbol {
  std::uint32_t label = 0;
  Passage passage = Passage::Over;
  int sign = 1;  // +1 or -1, stored redundantly at both passages

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

/// Signed oriented Gauss code of a virtual link. Components are ordered; a
/// crossing-free component is an empty word.
class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<Word> components) : components_(std::move(components)) {}

  const std::vector<Word>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  const Word& component(std::size_t i) const { return components_.at(i); }

  std::size_t symbol_count() const noexcept;
  std::size_t crossing_count() const noexcept { return symbol_count() / 2; }
  std::uint32_t max_label() const noexcept;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Word> components_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct Violation {
  enum class Kind { NoComponents, BadLabel, BadSign, WrongMultiplicity, DoubleOver, DoubleUnder, SignMismatch };
  Kind kind;
  std::uint32_t label = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error("invalid Gauss code: " + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Parses the text form `O1+U2-.../...`; whitespace is ignored, `0` is a
/// crossing-free component. Throws ParseError or ValidationError.
GaussCode parse_gauss(std::string_view text);

ValidationReport validate(const GaussCode& code);

/// Throws ValidationError if `code` is invalid.
void require_valid(const GaussCode& code);

std::string serialize_gauss(const GaussCode& code);

/// Renumbers labels 1..n in order of first appearance.
GaussCode canonical_relabel(const GaussCode& code);

/// canonical_relabel composed with the lexicographically minimal cyclic
/// rotation of every component. Two codes describe the same diagram iff their
/// normal forms are equal.
GaussCode normal_form(const GaussCode& code);

/// serialize_gauss(normal_form(code)); the search deduplication key.
std::string normal_key(const GaussCode& code);

/// The sublink on the given component indices (in the given order). Crossings
/// with dropped components disappear.
GaussCode sublink(const GaussCode& code, std::span<const std::size_t> components);

int writhe(const GaussCode& code);

}  // namespace vlink
