#ifndef LIECHAN_LIECHAN_HPP
#define LIECHAN_LIECHAN_HPP

#include "liechan/error.hpp"
#include "liechan/matcore.hpp"
#include "liechan/tensor.hpp"
#include "liechan/rng.hpp"
#include "liechan/polynomial.hpp"
#include "liechan/repgen.hpp"
#include "liechan/octonion.hpp"
#include "liechan/channel.hpp"
#include "liechan/bloch.hpp"
#include "liechan/io.hpp"

#endif
