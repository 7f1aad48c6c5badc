#include "mct/lang.hpp"

namespace mct {

std::string_view language_name(Language lang) {
  switch (lang) {
    case Language::Python:
      return "Python";
    case Language::Cpp:
      return "Cpp";
    case Language::Java:
      return "Java";
    case Language::Go:
      return "Go";
    case Language::JavaScript:
      return "JavaScript";
    case Language::Rust:
      return "Rust";
  }
  return "?";
}

std::string_view language_display(Language lang) {
  switch (lang) {
    case Language::Python:
      return "Python";
    case Language::Cpp:
      return "C++";
    case Language::Java:
      return "Java";
    case Language::Go:
      return "Go";
    case Language::JavaScript:
      return "JS";
    case Language::Rust:
      return "Rust";
  }
  return "?";
}

std::optional<Language> parse_language(std::string_view tag) {
  auto lower = std::string(tag);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "python" || lower == "py") return Language::Python;
  if (lower == "cpp" || lower == "c++" || lower == "cxx") return Language::Cpp;
  if (lower == "java") return Language::Java;
  if (lower == "go" || lower == "golang") return Language::Go;
  if (lower == "javascript" || lower == "js") return Language::JavaScript;
  if (lower == "rust" || lower == "rs") return Language::Rust;
  return std::nullopt;
}

}  // namespace mct
