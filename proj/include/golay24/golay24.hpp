#pragma once

#include "golay24/block.hpp"
#include "golay24/channel.hpp"
#include "golay24/fht.hpp"
#include "golay24/fixtures.hpp"
#include "golay24/gf2.hpp"
#include "golay24/golay.hpp"
#include "golay24/op_counter.hpp"
#include "golay24/oracle.hpp"
#include "golay24/sc.hpp"
#include "golay24/sim.hpp"
#include "golay24/textio.hpp"
#include "golay24/verify.hpp"
