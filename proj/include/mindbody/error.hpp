#pragma once

#include <stdexcept>
#include <string>

namespace mindbody {

enum class ErrorKind {
  degree_mismatch,
  needs_vertex_labels,
  precondition,
  strand_mismatch,
  index_range,
  selector_domain,
  cyclic_digraph,
  infeasible_type,
  unsupported,
  size_guard,
  parse,
  defect,
};

inline const char *error_kind_name(ErrorKind k)
{
  switch (k) {
  case ErrorKind::degree_mismatch: return "degree-mismatch";
  case ErrorKind::needs_vertex_labels: return "needs-vertex-labels";
  case ErrorKind::precondition: return "precondition";
  case ErrorKind::strand_mismatch: return "strand-mismatch";
  case ErrorKind::index_range: return "index-range";
  case ErrorKind::selector_domain: return "selector-domain";
  case ErrorKind::cyclic_digraph: return "cyclic-digraph";
  case ErrorKind::infeasible_type: return "infeasible-type";
  case ErrorKind::unsupported: return "unsupported";
  case ErrorKind::size_guard: return "size-guard";
  case ErrorKind::parse: return "parse";
  case ErrorKind::defect: return "defect";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
  {
  }
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace mindbody
