#ifndef WEIL_ERRORS_HPP
#define WEIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weil {

struct WeilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A putative mapping failed its well-definedness check: some generator of
/// the target ideal has a nonzero residue after substitution and reduction.
struct IllDefinedMap : WeilError {
  std::string generator;
  std::string residue;
  IllDefinedMap(std::string gen, std::string res)
      : WeilError("ill-defined map: generator " + gen +
                  " has nonzero residue " + res),
        generator(std::move(gen)),
        residue(std::move(res)) {}
};

struct NonzeroConstantTerm : WeilError {
  explicit NonzeroConstantTerm(const std::string& what) : WeilError(what) {}
};

struct MismatchError : WeilError {
  explicit MismatchError(const std::string& what) : WeilError(what) {}
};

struct BaseMismatch : WeilError {
  explicit BaseMismatch(const std::string& what) : WeilError(what) {}
};

struct NonPowerObject : WeilError {
  explicit NonPowerObject(const std::string& what) : WeilError(what) {}
};

/// A family handed to a limit lift violates one of the diagram's arrow
/// constraints; `arrow` names the offender.
struct IncompatibleFamily : WeilError {
  std::string arrow;
  explicit IncompatibleFamily(std::string arrow_name)
      : WeilError("family incompatible across arrow " + arrow_name),
        arrow(std::move(arrow_name)) {}
};

struct NotALimit : WeilError {
  explicit NotALimit(const std::string& what) : WeilError(what) {}
};

struct FactorizationFailure : WeilError {
  explicit FactorizationFailure(const std::string& what) : WeilError(what) {}
};

struct ParseError : WeilError {
  int line;
  int col;
  ParseError(int l, int c, const std::string& what)
      : WeilError("parse error at " + std::to_string(l) + ":" +
                  std::to_string(c) + ": " + what),
        line(l),
        col(c) {}
};

}  // namespace weil

#endif
