#include "gcol/schedule.hpp"

#include <stdexcept>

namespace gcol {

std::string_view to_string(PhaseKind k) { return k == PhaseKind::net ? "net" : "vertex"; }

std::string_view to_string(BalanceMode m) {
    switch (m) {
        case BalanceMode::b1: return "b1";
        case BalanceMode::b2: return "b2";
        case BalanceMode::none: break;
    }
    return "none";
}

BalanceMode parse_balance_mode(std::string_view name) {
    if (name == "none") return BalanceMode::none;
    if (name == "b1" || name == "B1") return BalanceMode::b1;
    if (name == "b2" || name == "B2") return BalanceMode::b2;
    throw std::invalid_argument("unknown balance mode '" + std::string(name) + "'");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"V-V",  "V-V-64", "V-V-64D", "V-Ninf",
                                                "V-N1", "V-N2",   "N1-N2",   "N2-N2"};
    return names;
}

StrategySchedule preset(std::string_view name) {
    StrategySchedule s;
    s.name = std::string(name);
    if (name == "V-V") {
        s.chunk_size = 0;
        s.queue_mode = QueueMode::shared_append;
    } else if (name == "V-V-64") {
        s.queue_mode = QueueMode::shared_append;
    } else if (name == "V-V-64D") {
        // defaults: chunk 64, local queues
    } else if (name == "V-Ninf" || name == "V-N∞") {
        s.name = "V-Ninf";
        s.net_removal_always = true;
    } else if (name == "V-N1") {
        s.net_removal_iterations = 1;
    } else if (name == "V-N2") {
        s.net_removal_iterations = 2;
    } else if (name == "N1-N2") {
        s.net_coloring_iterations = 1;
        s.net_removal_iterations = 2;
    } else if (name == "N2-N2") {
        s.net_coloring_iterations = 2;
        s.net_removal_iterations = 2;
    } else {
        throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
    }
    return s;
}

StrategySchedule attach_balancer(StrategySchedule schedule, BalanceMode mode) {
    schedule.balance = mode;
    return schedule;
}

}  // namespace gcol
