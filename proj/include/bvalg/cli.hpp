#ifndef BVALG_CLI_HPP
#define BVALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bvalg/report.hpp"

namespace bvalg {

enum ExitCode { kExitPass = 0, kExitAxiomFailure = 1, kExitInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// input diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3*a*b - 1/2*c"; prime-field values get a single trailing "(mod p)".
std::string rendered_text(const RenderedElement& e);

void write_human(const Report& report, std::ostream& out);
/// Deterministic: keys sorted, every number a string, no timing.
std::string to_json(const Report& report);

} // namespace bvalg

#endif
