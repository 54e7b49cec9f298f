#pragma once

#include <cctype>
#include <string>

namespace tf_test {

// Accepts the DOT subset: digraph ID { (node | edge | attribute | assignment statements ;)* }.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) : s_(text) {}

  bool valid() {
    if (!keyword("digraph")) return false;
    if (!id()) return false;
    if (!punct('{')) return false;
    while (true) {
      skip();
      if (peek() == '}') break;
      if (!statement()) return false;
    }
    punct('}');
    skip();
    return pos_ == s_.size();
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool punct(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(pos_, k.size(), k) != 0) return false;
    pos_ += k.size();
    return true;
  }

  bool id() {
    skip();
    if (peek() == '"') {
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= s_.size()) return false;
      ++pos_;
      return true;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '.' || s_[pos_] == '-'))
      ++pos_;
    return pos_ > start && s_.compare(start, 2, "->") != 0;
  }

  bool attr_list() {
    if (!punct('[')) return false;
    skip();
    while (peek() != ']') {
      if (!id() || !punct('=') || !id()) return false;
      skip();
      if (peek() == ',' || peek() == ';') ++pos_;
      skip();
    }
    return punct(']');
  }

  bool statement() {
    if (!id()) return false;
    skip();
    if (peek() == '=') {
      ++pos_;
      if (!id()) return false;
    } else {
      skip();
      if (s_.compare(pos_, 2, "->") == 0) {
        pos_ += 2;
        if (!id()) return false;
      }
      skip();
      if (peek() == '[' && !attr_list()) return false;
    }
    return punct(';');
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline bool valid_dot(const std::string& text) { return DotChecker(text).valid(); }

}  // namespace tf_test
