#pragma once

#include <stdexcept>
#include <string>

namespace wordprob {

  // Malformed text input: presentations, rewriting systems, terms, machines.
  class ParseError : public std::runtime_error {
   public:
    explicit ParseError(std::string const& what) : std::runtime_error(what) {}
    ParseError(std::size_t line, std::string const& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
  };

}  // namespace wordprob
