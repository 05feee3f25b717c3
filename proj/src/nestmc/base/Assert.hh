//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/base/Assert.hh
//! Contract checks and the project's exception types.
//---------------------------------------------------------------------------//
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Programming error: a precondition or internal invariant was violated
class ContractViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

//! Invalid user input or run configuration
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Geometry construction or tracking inconsistency
class GeometryError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! A geometry strategy cannot represent the requested model
class UnsupportedError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Fatal transport condition (source collapse, excessive particle loss)
class TransportError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
[[noreturn]] void
throw_contract(char const* kind, char const* cond, char const* file, int line);
}  // namespace detail

//---------------------------------------------------------------------------//
}  // namespace nestmc

//---------------------------------------------------------------------------//
// MACROS
//---------------------------------------------------------------------------//
//! Precondition, always checked
#define NMC_EXPECT(COND)                                                     \
    do                                                                       \
    {                                                                        \
        if (!(COND))                                                         \
        {                                                                    \
            ::nestmc::detail::throw_contract(                                \
                "precondition", #COND, __FILE__, __LINE__);                  \
        }                                                                    \
    } while (0)

//! Internal invariant, checked only in debug builds
#ifdef NDEBUG
#    define NMC_ASSERT(COND) \
        do                   \
        {                    \
        } while (0)
#else
#    define NMC_ASSERT(COND)                                                 \
        do                                                                   \
        {                                                                    \
            if (!(COND))                                                     \
            {                                                                \
                ::nestmc::detail::throw_contract(                            \
                    "assertion", #COND, __FILE__, __LINE__);                 \
            }                                                                \
        } while (0)
#endif

//! Throw an exception of type EXC with a streamed message if COND fails
#define NMC_VALIDATE(COND, EXC, MSG)                 \
    do                                               \
    {                                                \
        if (!(COND))                                 \
        {                                            \
            std::ostringstream nmc_msg_;             \
            nmc_msg_ MSG;                            \
            throw EXC(nmc_msg_.str());               \
        }                                            \
    } while (0)

//! Mark a code path that a validated model never reaches
#define NMC_ASSERT_UNREACHABLE()                                              \
    ::nestmc::detail::throw_contract(                                        \
        "unreachable", "false", __FILE__, __LINE__)
