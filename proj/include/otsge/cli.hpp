#ifndef OTSGE_CLI_HPP
#define OTSGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace otsge {

/// Dispatches one subcommand. Exit status 0 on success/accept, 1 on a
/// semantic reject (verification failure, invalid chirotope, solver
/// found nothing, domain errors), 2 on usage or format errors.
/// Reports go to `err`; machine artifacts go to output files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace otsge

#endif
