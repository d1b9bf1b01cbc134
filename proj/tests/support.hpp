#pragma once

#include "tbcalc/error.hpp"

#include <doctest.h>

#include <functional>

namespace support {

// Code of the Error raised by f; fails the test if nothing is raised.
inline tbcalc::ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const tbcalc::Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return tbcalc::ErrorCode::consistency_error;
}

}  // namespace support
