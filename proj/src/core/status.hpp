#pragma once

#include <stdexcept>
#include <string>

namespace edgecone {

enum class errc {
  ok = 0,
  invalid_argument,
  unsupported_parameters,
  domain_violation,
  non_positive_definite,
  asymmetry_exceeded,
  derivative_noise,
  budget_exceeded,
  quadrature_failure,
  tail_bound_unavailable,
  no_alf_for_e_type,
  non_integral_signature,
  internal,
};

const char* errc_name(errc c);

// Core error type. Carries a machine code so the C shim can translate
// without parsing messages.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid argument";
    case errc::unsupported_parameters: return "unsupported parameters";
    case errc::domain_violation: return "domain violation";
    case errc::non_positive_definite: return "metric not positive definite";
    case errc::asymmetry_exceeded: return "curvature symmetry residual exceeded";
    case errc::derivative_noise: return "irreducible derivative noise";
    case errc::budget_exceeded: return "evaluation budget exceeded";
    case errc::quadrature_failure: return "quadrature failure";
    case errc::tail_bound_unavailable: return "tail bound unavailable";
    case errc::no_alf_for_e_type: return "no ALF instanton for E-type diagrams";
    case errc::non_integral_signature: return "non-integral signature";
    case errc::internal: return "internal error";
  }
  return "unknown";
}

}  // namespace edgecone
