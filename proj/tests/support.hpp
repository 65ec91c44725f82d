#pragma once

#include "mgstab/errors.hpp"

#include <functional>

namespace mgstab::testsup {

inline bool fails_with(Errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace mgstab::testsup
