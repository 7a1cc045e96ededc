#include "poskit/errors.hpp"

namespace poskit {

namespace {

std::string format_syntax_message(std::size_t offset,
                                  const std::vector<std::string>& expected)
{
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!expected.empty()) {
        msg += ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i)
                msg += (i + 1 == expected.size()) ? " or " : ", ";
            msg += expected[i];
        }
    }
    return msg;
}

} // namespace

SpecSyntaxError::SpecSyntaxError(std::size_t offset,
                                 std::vector<std::string> expected)
    : Error(format_syntax_message(offset, expected))
    , offset_(offset)
    , expected_(std::move(expected))
{
}

} // namespace poskit
