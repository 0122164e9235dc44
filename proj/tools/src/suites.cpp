#include "orthoharm/tools/suites.hpp"

#include <functional>
#include <map>

#include "orthoharm/errors.hpp"

namespace orthoharm::tools {

Report run_suite(const std::string& name, const SuiteParams& p) {
    static const std::map<std::string, std::function<Report(const SuiteParams&)>> table{
        {"identities", run_identities}, {"kernel", run_kernel},         {"series", run_series},
        {"tube_limit", run_tube_limit}, {"restrict", run_restrict},     {"current_eq", run_current_eq},
        {"duality", run_duality},       {"constants", run_constants},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown suite '" + name + "'");
    return it->second(p);
}

}  // namespace orthoharm::tools
