// Generated by scripts/gen_rs_tables.py. Do not edit by hand.
//
// Taylor coefficients in p of the Riemann-Siegel remainder corrections,
// one slice per order, each entry [re, im]. Truncated at |c| < 1e-19.

pub const MAX_ORDER: usize = 10;

const ORDER_0: [[f64; 2]; 41] = [
    [1.9134171618254489e-1, -2.4516701493090415e-1],
    [0.0, 0.0],
    [2.1862023403876022e-1, -3.6933834884962953e-2],
    [0.0, 0.0],
    [6.6188287740171762e-2, 6.3534393856146029e-2],
    [0.0, 0.0],
    [-6.8025130238370943e-3, 2.7223912663570067e-2],
    [0.0, 0.0],
    [-6.7838109850517904e-3, 1.3857608771066520e-3],
    [0.0, 0.0],
    [-8.1186266157223264e-4, -1.1894494461013780e-3],
    [0.0, 0.0],
    [1.4852676866689845e-4, -2.1269820192893324e-4],
    [0.0, 0.0],
    [3.9716504397607348e-5, 1.1171327401990151e-5],
    [0.0, 0.0],
    [2.3278062307252253e-7, 5.8728583986520697e-6],
    [0.0, 0.0],
    [-7.1636258154775529e-7, 2.4982125529235179e-7],
    [0.0, 0.0],
    [-5.1774235561564730e-8, -7.3087003051015519e-8],
    [0.0, 0.0],
    [6.1789635419308690e-9, -7.5367914481640208e-9],
    [0.0, 0.0],
    [8.9405419289774525e-10, 4.1044257973312286e-10],
    [0.0, 0.0],
    [-1.6957071949635180e-11, 9.1065595502940845e-11],
    [0.0, 0.0],
    [-8.1633169512829526e-12, 4.3480990952496189e-13],
    [0.0, 0.0],
    [-1.8925546592706102e-13, -6.5209132615401300e-13],
    [0.0, 0.0],
    [4.6637116296008624e-14, -2.5746988391948219e-14],
    [0.0, 0.0],
    [2.6109215079890684e-15, 2.9783351960862872e-15],
    [0.0, 0.0],
    [-1.6753365363721319e-16, 2.2417569641965171e-16],
    [0.0, 0.0],
    [-1.7062132614058632e-17, -7.9936613787734565e-18],
    [0.0, 0.0],
    [2.8756016707161996e-19, -1.1768943516467545e-18],
];

const ORDER_1: [[f64; 2]; 44] = [
    [0.0, 0.0],
    [1.3412551314187674e-2, 1.2874759975006377e-2],
    [0.0, 0.0],
    [-6.8923867131759265e-3, 2.7583590544485476e-2],
    [0.0, 0.0],
    [-1.9245625241117541e-2, 3.9313941047833243e-3],
    [0.0, 0.0],
    [-4.9355331495310382e-3, -7.2309855457028799e-3],
    [0.0, 0.0],
    [1.6553798804292022e-3, -2.3705916935840135e-3],
    [0.0, 0.0],
    [7.3239042889770754e-4, 2.0600436497108181e-4],
    [0.0, 0.0],
    [6.6039703124384818e-6, 1.6661259000827618e-4],
    [0.0, 0.0],
    [-2.9613743509235707e-5, 1.0327371596376175e-5],
    [0.0, 0.0],
    [-2.9901212926867243e-6, -4.2209991450600253e-6],
    [0.0, 0.0],
    [4.8206612280849132e-7, -5.8800020540293924e-7],
    [0.0, 0.0],
    [9.1673668613572059e-8, 4.2085566331723899e-8],
    [0.0, 0.0],
    [-2.2335437813589168e-9, 1.1994936103088014e-8],
    [0.0, 0.0],
    [-1.3548175410886372e-9, 7.2162834786293599e-11],
    [0.0, 0.0],
    [-3.8926443271579255e-11, -1.3412344996791744e-10],
    [0.0, 0.0],
    [1.1718813005446844e-11, -6.4696140409623564e-12],
    [0.0, 0.0],
    [7.9150863949937608e-13, 9.0289119447448158e-13],
    [0.0, 0.0],
    [-6.0599707868618956e-14, 8.1088076451151639e-14],
    [0.0, 0.0],
    [-7.2918905805541535e-15, -3.4162730668257477e-15],
    [0.0, 0.0],
    [1.4393152629065959e-16, -5.8906698393030443e-16],
    [0.0, 0.0],
    [4.3314314510618621e-17, 1.9914245609874132e-18],
    [0.0, 0.0],
    [4.2153613635685206e-19, 2.9216015775198734e-18],
    [0.0, 0.0],
    [-1.8154036115486731e-19, 6.1850420778571455e-20],
];

const ORDER_2: [[f64; 2]; 45] = [
    [1.7813642837020446e-3, -4.0350905490072540e-4],
    [0.0, 0.0],
    [3.2270369626470867e-5, 5.0989835235474520e-3],
    [0.0, 0.0],
    [-5.4573077716448328e-3, -1.4582442565123619e-3],
    [0.0, 0.0],
    [1.2067899599521812e-3, -4.5300347369864321e-3],
    [0.0, 0.0],
    [2.6029135105464752e-3, 2.0558337838413082e-4],
    [0.0, 0.0],
    [1.6805182957052187e-4, 1.0319165540237859e-3],
    [0.0, 0.0],
    [-2.9623767075319055e-4, 1.3140869567210608e-4],
    [0.0, 0.0],
    [-5.1112821656826690e-5, -6.3911041680444982e-5],
    [0.0, 0.0],
    [1.0463668909417716e-5, -1.3949174696837559e-5],
    [0.0, 0.0],
    [2.9646610858747096e-6, 1.2443332979123743e-6],
    [0.0, 0.0],
    [-8.2361528433250996e-8, 5.1621394408785656e-7],
    [0.0, 0.0],
    [-7.5830988454995665e-8, 5.6184311589760605e-9],
    [0.0, 0.0],
    [-2.9525409331570857e-9, -9.5654787152722563e-9],
    [0.0, 0.0],
    [1.0458776917170324e-9, -5.9666958268987568e-10],
    [0.0, 0.0],
    [8.9079689627845219e-11, 9.9237377512871860e-11],
    [0.0, 0.0],
    [-8.0841983851332646e-12, 1.1045429172184174e-11],
    [0.0, 0.0],
    [-1.1904334948432205e-12, -5.4536605797856053e-13],
    [0.0, 0.0],
    [2.7001201827059677e-14, -1.1415799221636053e-13],
    [0.0, 0.0],
    [9.8758144041140546e-15, 3.9038513008948489e-16],
    [0.0, 0.0],
    [1.1663783885770829e-16, 7.7732389769768614e-16],
    [0.0, 0.0],
    [-5.5941490311772933e-17, 1.9370900371446560e-17],
    [0.0, 0.0],
    [-2.0819933909198689e-18, -3.6877809584272501e-18],
    [0.0, 0.0],
    [2.2231849357816233e-19, -1.8385464216515175e-19],
];

const ORDER_3: [[f64; 2]; 46] = [
    [0.0, 0.0],
    [7.1254724725856078e-4, 9.6549579157267472e-4],
    [0.0, 0.0],
    [-1.7806478852026608e-3, -7.9358872118971209e-5],
    [0.0, 0.0],
    [6.7819437940396096e-4, -1.6819205748642316e-3],
    [0.0, 0.0],
    [1.1087570571689089e-3, 7.6802219906986910e-4],
    [0.0, 0.0],
    [-4.8528523713547159e-4, 6.2864280359635755e-4],
    [0.0, 0.0],
    [-2.9981886851102073e-4, -1.9406496995458869e-4],
    [0.0, 0.0],
    [5.1196733460573953e-5, -1.1403567901207454e-4],
    [0.0, 0.0],
    [3.4362910001472255e-5, 8.3001956771611925e-6],
    [0.0, 0.0],
    [-3.1326402455032506e-7, 8.3454512715229134e-6],
    [0.0, 0.0],
    [-1.6677795743539096e-6, 2.8220104237074331e-7],
    [0.0, 0.0],
    [-1.0945690122228966e-7, -2.7898172131725665e-7],
    [0.0, 0.0],
    [3.9494193173675762e-8, -2.5813853712731208e-8],
    [0.0, 0.0],
    [4.7075818129781261e-9, 4.7451998901605065e-9],
    [0.0, 0.0],
    [-4.7895052742015178e-10, 7.1526829231924971e-10],
    [0.0, 0.0],
    [-9.3837138747655728e-11, -3.9031714126663078e-11],
    [0.0, 0.0],
    [2.2219125812590905e-12, -1.0853284325034110e-11],
    [0.0, 0.0],
    [1.1216057912848888e-12, 1.4914830287821847e-14],
    [0.0, 0.0],
    [1.8127106896477530e-14, 1.0448357673042148e-13],
    [0.0, 0.0],
    [-8.8218579612921396e-15, 3.2542770667057832e-15],
    [0.0, 0.0],
    [-3.9803165931719981e-16, -6.7672915555396030e-16],
    [0.0, 0.0],
    [4.7107944689048607e-17, -4.0223508704222879e-17],
    [0.0, 0.0],
    [3.5667570064556461e-18, 2.9564088686955300e-18],
    [0.0, 0.0],
    [-1.6453002720528385e-19, 2.8530016802306479e-19],
];

const ORDER_4: [[f64; 2]; 47] = [
    [2.3213083093786273e-4, -1.5153561052014305e-6],
    [0.0, 0.0],
    [-4.8472176480742135e-4, 2.4639428993014853e-4],
    [0.0, 0.0],
    [1.1575298032413675e-4, -6.5953766816882965e-4],
    [0.0, 0.0],
    [4.9909655096131177e-4, 3.9859019441198000e-4],
    [0.0, 0.0],
    [-3.8224868581314369e-4, 2.5109535543881983e-4],
    [0.0, 0.0],
    [-9.8409342253283746e-5, -2.4291117297347295e-4],
    [0.0, 0.0],
    [1.1649798440005338e-4, -3.8373249697400217e-5],
    [0.0, 0.0],
    [1.6089378815390890e-5, 4.3465066323322588e-5],
    [0.0, 0.0],
    [-1.2835781648228914e-5, 6.2769119189626373e-6],
    [0.0, 0.0],
    [-2.0496102865879455e-6, -3.0502463374689423e-6],
    [0.0, 0.0],
    [5.9076702243288090e-7, -5.4914287624479274e-7],
    [0.0, 0.0],
    [1.2230147026774987e-7, 9.3640790454669279e-8],
    [0.0, 0.0],
    [-1.1989623994461662e-8, 2.3077840267495903e-8],
    [0.0, 0.0],
    [-3.7545855907621282e-9, -1.1704963181808614e-9],
    [0.0, 0.0],
    [6.6890396356714975e-11, -5.3425769726458255e-10],
    [0.0, 0.0],
    [6.7239756369355139e-11, -3.5392326295918558e-12],
    [0.0, 0.0],
    [1.7550769920823134e-12, 7.5477880302338825e-12],
    [0.0, 0.0],
    [-7.5995572918194833e-13, 3.2365339139719568e-13],
    [0.0, 0.0],
    [-4.4575794917273054e-14, -6.8822127549290680e-14],
    [0.0, 0.0],
    [5.6005228834212402e-15, -5.1622899688622916e-15],
    [0.0, 0.0],
    [5.2586489671284681e-16, 4.0679318668266519e-16],
    [0.0, 0.0],
    [-2.5905503637346078e-17, 4.8213464317212681e-17],
    [0.0, 0.0],
    [-4.0335470394861526e-18, -1.3815309586359115e-18],
    [0.0, 0.0],
    [5.3081386109040729e-20, -3.1069749500807566e-19],
];

const ORDER_5: [[f64; 2]; 48] = [
    [0.0, 0.0],
    [-5.3441979059010776e-5, 1.4540992123631925e-4],
    [0.0, 0.0],
    [-6.9558812897689662e-5, -2.1825016743336644e-4],
    [0.0, 0.0],
    [2.4773271605317161e-4, 1.1821820234778636e-4],
    [0.0, 0.0],
    [-2.0359399233199761e-4, 1.2596370835033679e-4],
    [0.0, 0.0],
    [-2.3012743761677328e-5, -1.6471249345398430e-4],
    [0.0, 0.0],
    [9.2277210785032497e-5, 1.3972513222869843e-5],
    [0.0, 0.0],
    [-1.4130509006050586e-5, 4.1347385250256503e-5],
    [0.0, 0.0],
    [-1.5757207814260139e-5, -6.7043198294841203e-6],
    [0.0, 0.0],
    [2.1365177615821921e-6, -5.1742176968267669e-6],
    [0.0, 0.0],
    [1.4588882420620323e-6, 4.9039131151896213e-7],
    [0.0, 0.0],
    [-7.9193448346263290e-8, 3.5262018650397348e-7],
    [0.0, 0.0],
    [-7.3346281960787756e-8, -6.9906215091080169e-9],
    [0.0, 0.0],
    [-5.9428158794622187e-10, -1.3223986113524662e-8],
    [0.0, 0.0],
    [2.0833336590660434e-9, -4.0823387166982643e-10],
    [0.0, 0.0],
    [1.0456970962061252e-10, 2.8889131107514987e-10],
    [0.0, 0.0],
    [-3.5455757620942000e-11, 1.9556030456835126e-11],
    [0.0, 0.0],
    [-3.0114516018191741e-12, -3.8624270290364182e-12],
    [0.0, 0.0],
    [3.7305408124592500e-13, -4.0047814292913730e-13],
    [0.0, 0.0],
    [4.7172356956900954e-14, 3.1695263345829898e-14],
    [0.0, 0.0],
    [-2.3174146545079346e-15, 4.9998124500755954e-15],
    [0.0, 0.0],
    [-4.8201366309921683e-16, -1.3730181791801103e-16],
    [0.0, 0.0],
    [5.2345030722013972e-18, -4.2596473181289634e-17],
    [0.0, 0.0],
    [3.4703082058646251e-18, -1.0938892576806968e-19],
    [0.0, 0.0],
    [4.8639164406991115e-20, 2.6171184790600740e-19],
];

const ORDER_6: [[f64; 2]; 49] = [
    [1.5650604360682183e-5, 2.0027152597093384e-5],
    [0.0, 0.0],
    [-6.0276556607270522e-5, -3.7475023600049358e-5],
    [0.0, 0.0],
    [1.0719729655804712e-4, -3.4775265724601582e-6],
    [0.0, 0.0],
    [-8.1633703551479959e-5, 8.1348522696006912e-5],
    [0.0, 0.0],
    [-1.4697231446842001e-5, -9.3954283882624357e-5],
    [0.0, 0.0],
    [5.9618756337066202e-5, 2.1058587442919393e-5],
    [0.0, 0.0],
    [-2.2705638386803982e-5, 2.6463295109301828e-5],
    [0.0, 0.0],
    [-9.1314925624775761e-6, -1.3384962231477956e-5],
    [0.0, 0.0],
    [5.8290295310703291e-6, -2.7062422386441621e-6],
    [0.0, 0.0],
    [7.6570645287397399e-7, 2.0351274646407854e-6],
    [0.0, 0.0],
    [-5.8841342559557672e-7, 2.1828972640087102e-7],
    [0.0, 0.0],
    [-6.0696999393574470e-8, -1.4332772051249106e-7],
    [0.0, 0.0],
    [2.9766960863319811e-8, -1.5494889893362103e-8],
    [0.0, 0.0],
    [3.5021237113344546e-9, 5.3204884327314791e-9],
    [0.0, 0.0],
    [-8.2402557937767578e-10, 6.9357124022808738e-10],
    [0.0, 0.0],
    [-1.2070417236316257e-10, -1.1096519404863126e-10],
    [0.0, 0.0],
    [1.2967713163686896e-11, -1.8602082442770932e-11],
    [0.0, 0.0],
    [2.5607169403035785e-12, 1.2997834099352447e-12],
    [0.0, 0.0],
    [-1.0793611886399862e-13, 3.1743246533765409e-13],
    [0.0, 0.0],
    [-3.5688253410694271e-14, -6.6470221776742427e-15],
    [0.0, 0.0],
    [1.4527649195145416e-16, -3.6609479422082215e-15],
    [0.0, 0.0],
    [3.4433554535196936e-16, -3.6315929098917817e-17],
    [0.0, 0.0],
    [7.5998776859670144e-18, 2.9808003621880549e-17],
    [0.0, 0.0],
    [-2.3811291876020107e-18, 9.8912328092742090e-19],
    [0.0, 0.0],
    [-1.0464603670533405e-19, -1.7574764043627684e-19],
];

const ORDER_7: [[f64; 2]; 50] = [
    [0.0, 0.0],
    [-1.5982143791470749e-5, 8.6295385059171206e-6],
    [0.0, 0.0],
    [2.7320532827602090e-5, -2.5043476802222686e-5],
    [0.0, 0.0],
    [-1.6522917874011329e-5, 4.8067987027143252e-5],
    [0.0, 0.0],
    [-1.9254376310180059e-5, -4.6191837097419801e-5],
    [0.0, 0.0],
    [3.7390260111053808e-5, 1.1325833405606762e-5],
    [0.0, 0.0],
    [-1.8772564792217982e-5, 1.6484797993306504e-5],
    [0.0, 0.0],
    [-3.7411826760924242e-6, -1.2943355837754442e-5],
    [0.0, 0.0],
    [6.1953502318442687e-6, 3.2141987667106921e-7],
    [0.0, 0.0],
    [-7.0511172351010511e-7, 2.3614892521684981e-6],
    [0.0, 0.0],
    [-7.6745785688953839e-7, -3.6200481886192558e-7],
    [0.0, 0.0],
    [1.2463047294725509e-7, -2.2019195401095151e-7],
    [0.0, 0.0],
    [5.6495841000798793e-8, 3.3043313670328897e-8],
    [0.0, 0.0],
    [-7.0765111983779698e-9, 1.2980455523775445e-8],
    [0.0, 0.0],
    [-2.6664673812893527e-9, -1.2470262688779585e-9],
    [0.0, 0.0],
    [1.8067151383526764e-10, -4.8961654167950539e-10],
    [0.0, 0.0],
    [8.0522203325355991e-11, 2.0892200110250791e-11],
    [0.0, 0.0],
    [-1.7154994128692401e-12, 1.1903848406702483e-11],
    [0.0, 0.0],
    [-1.5888400416905751e-12, -3.9023639902011611e-14],
    [0.0, 0.0],
    [-1.9207044191842176e-14, -1.9232906025731218e-13],
    [0.0, 0.0],
    [2.1201839407852335e-14, -4.9078294597222861e-15],
    [0.0, 0.0],
    [7.9914170400408447e-16, 2.1357909709115988e-15],
    [0.0, 0.0],
    [-1.9709364537000957e-16, 1.0521043251697894e-16],
    [0.0, 0.0],
    [-1.2001183644837498e-17, -1.6680892214491518e-17],
    [0.0, 0.0],
    [1.2938931908889132e-18, -1.2237517231869869e-18],
    [0.0, 0.0],
    [1.1352546362978009e-19, 9.1655785076519100e-20],
];

const ORDER_8: [[f64; 2]; 49] = [
    [1.2786903048532079e-6, 3.1647846086996180e-6],
    [0.0, 0.0],
    [-2.1126109327895225e-6, -1.1167643757930308e-5],
    [0.0, 0.0],
    [6.7699458918781528e-6, 1.8916392605691048e-5],
    [0.0, 0.0],
    [-1.8063519163536499e-5, -1.6243478753178643e-5],
    [0.0, 0.0],
    [2.2251001700748945e-5, 9.7633683889293768e-7],
    [0.0, 0.0],
    [-1.1607554764297897e-5, 1.1676305843793318e-5],
    [0.0, 0.0],
    [-1.8068192383953176e-6, -1.0007838480325600e-5],
    [0.0, 0.0],
    [5.0840139976127851e-6, 1.6776211742051618e-6],
    [0.0, 0.0],
    [-1.5935764753166418e-6, 1.8415531208629627e-6],
    [0.0, 0.0],
    [-5.0921521247869635e-7, -8.1944715656457862e-7],
    [0.0, 0.0],
    [3.1559682831686875e-7, -1.1160891683785816e-7],
    [0.0, 0.0],
    [2.0368766594677838e-8, 9.9791773009311298e-8],
    [0.0, 0.0],
    [-2.6944646762272537e-8, 3.4893293324099393e-9],
    [0.0, 0.0],
    [-6.9005460480741479e-10, -6.3342738457478069e-9],
    [0.0, 0.0],
    [1.3107626782561092e-9, -1.6833665638837068e-10],
    [0.0, 0.0],
    [4.2793519644093488e-11, 2.4053753585407322e-10],
    [0.0, 0.0],
    [-3.9379410669404652e-11, 9.8755942206517354e-12],
    [0.0, 0.0],
    [-1.9864853490227310e-12, -5.7815935374125458e-12],
    [0.0, 0.0],
    [7.6470096741795703e-13, -3.4851372907047636e-13],
    [0.0, 0.0],
    [5.3920606902346308e-14, 9.1457284453179849e-14],
    [0.0, 0.0],
    [-9.9166144084808129e-15, 7.4451871720364564e-15],
    [0.0, 0.0],
    [-9.2719196594027785e-16, -9.7585893352453372e-16],
    [0.0, 0.0],
    [8.7043376888083085e-17, -1.0507387607328922e-16],
    [0.0, 0.0],
    [1.0915884528436739e-17, 7.0012943804727664e-18],
    [0.0, 0.0],
    [-5.0154445451315899e-19, 1.0459981568693280e-18],
];

const ORDER_9: [[f64; 2]; 50] = [
    [0.0, 0.0],
    [-3.4087985957646176e-6, -1.1189497906198668e-8],
    [0.0, 0.0],
    [6.6888469135347883e-6, 2.1278930547306754e-6],
    [0.0, 0.0],
    [-1.0724812009365527e-5, -9.6507049539044891e-7],
    [0.0, 0.0],
    [1.0846776824336261e-5, -4.5262306056107003e-6],
    [0.0, 0.0],
    [-5.0486123469364698e-6, 8.7078862140660580e-6],
    [0.0, 0.0],
    [-1.8639264298105770e-6, -6.8454299001813812e-6],
    [0.0, 0.0],
    [3.9162623642424060e-6, 1.6144915409035796e-6],
    [0.0, 0.0],
    [-1.7565790931394097e-6, 1.2873306321049941e-6],
    [0.0, 0.0],
    [-1.7885735659107270e-7, -9.5977678281723811e-7],
    [0.0, 0.0],
    [3.7881202992443670e-7, 6.6084585742609150e-8],
    [0.0, 0.0],
    [-5.7686287803854361e-8, 1.2064985184892069e-7],
    [0.0, 0.0],
    [-3.2962690626223800e-8, -2.4665445121878633e-8],
    [0.0, 0.0],
    [7.8130835732964472e-9, -8.0535220748628693e-9],
    [0.0, 0.0],
    [1.8074971982529944e-9, 2.0181399379581524e-9],
    [0.0, 0.0],
    [-4.4228182756127242e-10, 3.7726612506304526e-10],
    [0.0, 0.0],
    [-7.3285966093725663e-11, -8.3980491788572807e-11],
    [0.0, 0.0],
    [1.3993809576832804e-11, -1.3183433969421199e-11],
    [0.0, 0.0],
    [2.1841928930854779e-12, 2.0632402082658251e-12],
    [0.0, 0.0],
    [-2.7050693101334370e-13, 3.3216336688971637e-13],
    [0.0, 0.0],
    [-4.6329456377545094e-14, -3.1592602429789046e-14],
    [0.0, 0.0],
    [3.2786463070370027e-15, -5.9334260091237901e-15],
    [0.0, 0.0],
    [6.9939038943256578e-16, 2.9944581988959249e-16],
    [0.0, 0.0],
    [-2.3476574714620114e-17, 7.6099637664289070e-17],
    [0.0, 0.0],
    [-7.6675523226746425e-18, -1.4755735224784542e-18],
    [0.0, 0.0],
    [5.6178748953538008e-20, -7.1757974244029015e-19],
];

const ORDER_10: [[f64; 2]; 51] = [
    [-9.9021817908625844e-8, 7.8363989198802074e-7],
    [0.0, 0.0],
    [1.3363348046907869e-6, -1.7788483108338942e-6],
    [0.0, 0.0],
    [-3.1144634757218668e-6, 2.9452892544007821e-6],
    [0.0, 0.0],
    [3.0033375142259044e-6, -4.8774647404213914e-6],
    [0.0, 0.0],
    [-5.1771280209377366e-7, 5.6976617275414535e-6],
    [0.0, 0.0],
    [-2.3244851363577747e-6, -3.9827014772731093e-6],
    [0.0, 0.0],
    [2.9852386380454906e-6, 8.8243590318572126e-7],
    [0.0, 0.0],
    [-1.4986749760586027e-6, 9.9420851257694118e-7],
    [0.0, 0.0],
    [5.2998779284530871e-9, -9.0321642397294925e-7],
    [0.0, 0.0],
    [3.4956313245192180e-7, 1.9150154936101473e-7],
    [0.0, 0.0],
    [-1.2269513229748214e-7, 9.5864214269894737e-8],
    [0.0, 0.0],
    [-1.7993089889444839e-8, -5.1010558807757047e-8],
    [0.0, 0.0],
    [1.6687810025823340e-8, -1.5202300195148836e-9],
    [0.0, 0.0],
    [-4.0812960835408492e-10, 4.6152219632197345e-9],
    [0.0, 0.0],
    [-1.1191919694148909e-9, -2.3441152277462188e-10],
    [0.0, 0.0],
    [6.8220048487939819e-11, -2.4282335284772785e-10],
    [0.0, 0.0],
    [4.7655760801763792e-11, 1.4766650649241737e-11],
    [0.0, 0.0],
    [-2.5868951215030633e-12, 8.5100005035604764e-12],
    [0.0, 0.0],
    [-1.3874463771806952e-12, -3.7655953674405116e-13],
    [0.0, 0.0],
    [4.5410086181553779e-14, -2.0704858259537282e-13],
    [0.0, 0.0],
    [2.8349055167469573e-14, 4.3459307240264359e-15],
    [0.0, 0.0],
    [-2.7543188701583261e-16, 3.5703416189511830e-15],
    [0.0, 0.0],
    [-4.1469807956218164e-16, 2.8735231709272975e-18],
    [0.0, 0.0],
    [-4.3653391497826800e-18, -4.4540714281380031e-17],
    [0.0, 0.0],
    [4.4349271133866371e-18, -8.7041760481454134e-19],
    [0.0, 0.0],
    [1.2426395607370969e-19, 4.1031383765402855e-19],
];

pub(super) static CORRECTIONS: [&[[f64; 2]]; 11] = [
    &ORDER_0,
    &ORDER_1,
    &ORDER_2,
    &ORDER_3,
    &ORDER_4,
    &ORDER_5,
    &ORDER_6,
    &ORDER_7,
    &ORDER_8,
    &ORDER_9,
    &ORDER_10,
];
