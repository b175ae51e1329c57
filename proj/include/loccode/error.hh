#pragma once

#include <stdexcept>
#include <string>

namespace loccode
{
    /// Malformed graph, code or pattern input. Carries the 1-based line
    /// number when the problem is tied to a line.
    class ParseError : public std::runtime_error
    {
        public:
            explicit ParseError(const std::string & message, int line = 0) :
                std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };
}
