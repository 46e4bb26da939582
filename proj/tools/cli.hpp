#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sodsteg::cli {

// Exit statuses, one per failure class.
enum Status : int {
    ok = 0,
    usage = 1,
    io = 2,
    image_format = 3,
    invalid_parameter = 4,
    dimension = 5,
    payload = 6,
    convergence = 7,
};

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sodsteg::cli
