//! Published table values, one CSV block per panel (rows f = 0..5).

pub const TABLE1: &str = "\
f,10,20,30,40,50,60,70,80,90,100
0,74.1,86.1,90.5,92.8,94.2,95.1,95.8,96.3,96.7,97.0
1,60.6,78.4,85.1,88.7,90.9,92.3,93.4,94.2,94.8,95.3
2,49.3,71.7,80.5,85.1,87.9,89.9,91.3,92.3,93.2,93.8
3,39.3,65.6,76.1,81.7,85.2,87.6,89.3,90.6,91.6,92.5
4,30.3,59.9,72.0,78.6,82.6,85.4,87.4,88.9,90.1,91.1
5,22.2,54.4,68.1,75.5,80.1,83.3,85.5,87.3,88.7,89.8
";

pub const TABLE2: &str = "\
f,10,20,30,40,50,60,70,80,90,100
0,65.1,87.8,95.8,98.5,99.5,99.8,99.9,100.0,100.0,100.0
1,26.4,60.8,81.6,92.0,96.6,98.6,99.5,99.8,99.9,100.0
2,7.0,32.3,58.9,77.7,88.8,94.7,97.6,98.9,99.5,99.8
3,1.3,13.3,35.3,57.7,75.0,86.3,92.9,96.5,98.3,99.2
4,0.2,4.3,17.5,37.1,56.9,72.9,84.1,91.2,95.3,97.6
5,0.0,1.1,7.3,20.6,38.4,56.3,71.3,82.3,89.7,94.2
";

pub const TABLE3: &str = "\
f,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15
0,50.0,61.8,68.2,72.4,75.5,77.8,79.7,81.2,82.4,83.5,84.5,85.2,86.0,86.6,87.2
1,0.0,38.2,50.0,57.2,62.3,66.1,69.1,71.5,73.5,75.2,76.7,77.9,79.1,80.0,81.0
2,0.0,0.0,31.8,42.8,50.0,55.3,59.4,62.7,65.4,67.7,69.6,71.3,72.9,74.2,75.4
3,0.0,0.0,0.0,27.6,37.7,44.7,50.0,54.2,57.6,60.5,63.0,65.1,66.9,68.6,70.1
4,0.0,0.0,0.0,0.0,24.5,33.9,40.6,45.8,50.0,53.5,56.4,59.0,61.2,63.2,65.0
5,0.0,0.0,0.0,0.0,0.0,22.2,31.0,37.3,42.4,46.5,50.0,53.0,55.6,57.9,59.9
f,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30
0,87.7,88.2,88.6,89.0,89.4,89.7,90.1,90.3,90.6,90.9,91.1,91.3,91.6,91.8,91.9
1,81.8,82.5,83.2,83.8,84.3,84.9,85.4,85.8,86.2,86.6,87.0,87.3,87.7,88.0,88.3
2,76.4,77.4,78.3,79.1,79.8,80.6,81.2,81.8,82.3,82.8,83.3,83.8,84.2,84.6,85.0
3,71.4,72.6,73.7,74.7,75.6,76.4,77.2,77.9,78.6,79.3,79.8,80.4,80.9,81.4,81.9
4,66.5,68.0,69.2,70.4,71.5,72.5,73.4,74.3,75.1,75.8,76.5,77.2,77.8,78.4,78.9
5,61.7,63.4,64.9,66.2,67.5,68.6,69.7,70.7,71.6,72.5,73.3,74.0,74.7,75.4,76.0
f,31,33,35,37,39,41,43,45,47,49,51,53,55,57,59
0,92.1,92.5,92.8,93.1,93.3,93.5,93.7,93.9,94.1,94.3,94.5,94.6,94.8,94.9,95.0
1,88.5,89.1,89.5,89.9,90.3,90.7,91.0,91.3,91.6,91.8,92.1,92.3,92.5,92.7,92.9
2,85.3,86.0,86.6,87.2,87.6,88.1,88.5,88.9,89.3,89.6,89.9,90.2,90.5,90.8,91.0
3,82.3,83.1,83.9,84.5,85.1,85.7,86.2,86.7,87.1,87.5,87.9,88.3,88.6,88.9,89.2
4,79.4,80.4,81.2,82.0,82.7,83.4,84.0,84.5,85.1,85.5,86.0,86.4,86.8,87.2,87.5
5,76.6,77.7,78.7,79.6,80.4,81.1,81.8,82.4,83.0,83.6,84.1,84.6,85.0,85.5,85.8
f,60,90,120,150,180,210,240,270,300,330,360,390,420,450,480
0,95.1,96.4,97.1,97.6,97.9,98.1,98.3,98.5,98.6,98.7,98.8,98.8,99.0,99.0,99.0
1,93.0,94.9,95.9,96.6,97.0,97.4,97.7,97.9,98.1,98.2,98.3,98.5,98.5,98.6,98.7
2,91.1,93.5,94.9,95.7,96.3,96.7,97.1,97.4,97.6,97.8,97.9,98.1,98.2,98.3,98.4
3,89.3,92.3,93.9,94.9,95.7,96.2,96.6,96.9,97.2,97.4,97.6,97.7,97.9,98.0,98.1
4,87.7,91.1,93.0,94.2,95.0,95.6,96.1,96.4,96.8,97.0,97.2,97.4,97.6,97.7,97.8
5,86.1,89.9,92.1,93.4,94.4,95.0,95.6,96.0,96.4,96.6,96.9,97.1,97.3,97.5,97.6
";
