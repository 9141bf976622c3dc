#pragma once

#include <gtest/gtest.h>

#include "dirichlet/error.hpp"

/// Code of the dirichlet::Error thrown by fn; records a failure if none is thrown.
template <class Fn>
dirichlet::Errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const dirichlet::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return dirichlet::Errc::Mismatch;
}
